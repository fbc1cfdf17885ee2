#include "depth2/modal_algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "depth2/errors.hpp"

namespace depth2 {

namespace {

std::vector<Element> extend_from_atoms(const BooleanAlgebra& ba, const std::vector<Element>& values) {
  std::vector<Element> table(ba.size());
  for (std::uint32_t x = 1; x < ba.size(); ++x) {
    table[x] = table[x & (x - 1)] | values[std::countr_zero(x)];
  }
  return table;
}

// Packs the bits of x selected by keep into the low bits, preserving order.
std::uint32_t compress(std::uint32_t x, std::uint32_t keep) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t m = keep; m != 0; m &= m - 1) {
    if (x & (m & -m)) out |= std::uint32_t{1} << k;
    ++k;
  }
  return out;
}

// Normal/additive/closure checks shared by an operator and its dual.
OperatorProperties basic_properties(const OperatorTable& table) {
  OperatorProperties p;
  const auto n = static_cast<std::uint32_t>(table.size());
  p.normal = table(Element{}).is_zero();

  // Additive iff every value equals f(0) joined with the values of its atoms.
  p.additive = true;
  std::vector<Element> from_atoms(n);
  from_atoms[0] = table(Element{});
  for (std::uint32_t x = 1; x < n && p.additive; ++x) {
    from_atoms[x] = from_atoms[x & (x - 1)] | table(Element(x & -x));
    p.additive = from_atoms[x] == table(Element(x));
  }

  bool cl1 = true;
  bool cl2 = true;
  for (std::uint32_t x = 0; x < n; ++x) {
    const Element fx = table(Element(x));
    cl1 = cl1 && Element(x).leq(fx);
    cl2 = cl2 && table(fx) == fx;
  }
  p.closure = p.normal && p.additive && cl1 && cl2;
  return p;
}

}  // namespace

Element ModalOperator::apply(Element x) const {
  Element out;
  for (std::uint32_t m = x.bits; m != 0; m &= m - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    if (i >= atom_values_.size()) throw DomainError("element outside operator domain");
    out = out | atom_values_[i];
  }
  return out;
}

ModalAlgebra::ModalAlgebra(BooleanAlgebra base, ModalOperator op) : base_(base), op_(std::move(op)) {
  if (op_.arity() != base_.atoms()) {
    throw ArityError("operator has " + std::to_string(op_.arity()) + " atom values, algebra has " +
                     std::to_string(base_.atoms()) + " atoms");
  }
  for (const Element v : op_.atom_values()) base_.check(v);
  table_ = extend_from_atoms(base_, op_.atom_values());
}

ModalOperator operator_from_atom_values(const BooleanAlgebra& ba, std::vector<Element> values) {
  if (static_cast<int>(values.size()) != ba.atoms()) {
    throw ArityError("expected " + std::to_string(ba.atoms()) + " atom values, got " +
                     std::to_string(values.size()));
  }
  for (const Element v : values) ba.check(v);
  return ModalOperator(std::move(values));
}

OperatorProperties operator_properties(const BooleanAlgebra& ba, const OperatorTable& table) {
  if (table.size() != ba.size()) {
    throw ArityError("operator table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(ba.size()));
  }
  for (const Element v : table.values()) ba.check(v);

  OperatorProperties p = basic_properties(table);
  // Interior operators are exactly the duals of closure operators.
  p.interior = basic_properties(dual_operator(ba, table)).closure;
  return p;
}

OperatorProperties operator_properties(const ModalAlgebra& a) {
  return operator_properties(a.base(), a.table());
}

bool is_closure_algebra(const ModalAlgebra& a) {
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    const Element fx = a.f(Element(x));
    if (!Element(x).leq(fx) || a.f(fx) != fx) return false;
  }
  return true;
}

OperatorTable dual_operator(const BooleanAlgebra& ba, const OperatorTable& table) {
  if (table.size() != ba.size()) throw ArityError("operator table does not match algebra size");
  const std::uint32_t top = ba.top().bits;
  std::vector<Element> out(ba.size());
  for (std::uint32_t x = 0; x < ba.size(); ++x) out[x] = Element(top ^ table(Element(top ^ x)).bits);
  return OperatorTable(std::move(out));
}

OperatorTable dual_operator(const ModalAlgebra& a) { return dual_operator(a.base(), a.table()); }

ElementSet closed_elements(const ModalAlgebra& a) {
  ElementSet out;
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (a.f(Element(x)) == Element(x)) out.emplace_back(x);
  }
  return out;
}

ElementSet open_elements(const ModalAlgebra& a) {
  ElementSet out;
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (a.dual(Element(x)) == Element(x)) out.emplace_back(x);
  }
  return out;
}

ModalOperator identity_operator(const BooleanAlgebra& ba) {
  std::vector<Element> v;
  for (int i = 0; i < ba.atoms(); ++i) v.push_back(ba.atom(i));
  return ModalOperator(std::move(v));
}

ModalOperator discriminator(const BooleanAlgebra& ba) {
  return ModalOperator(std::vector<Element>(static_cast<std::size_t>(ba.atoms()), ba.top()));
}

ModalOperator extremal_operator(ExtremalKind kind, const BooleanAlgebra& ba, Element param) {
  ba.check(param);
  if (kind == ExtremalKind::uu && param.is_zero()) {
    throw ParameterError("uu operator requires a nonzero parameter");
  }
  std::vector<Element> v;
  v.reserve(static_cast<std::size_t>(ba.atoms()));
  for (int i = 0; i < ba.atoms(); ++i) {
    const Element at = ba.atom(i);
    const bool below = at.leq(param);
    switch (kind) {
      case ExtremalKind::iu:
        v.push_back(below ? at : ba.top());
        break;
      case ExtremalKind::ui:
        v.push_back(param | at);
        break;
      case ExtremalKind::uu:
        v.push_back(below ? param : ba.top());
        break;
      case ExtremalKind::ii:
        v.push_back(below ? at : param | at);
        break;
    }
  }
  return ModalOperator(std::move(v));
}

ModalAlgebra extremal_algebra(ExtremalKind kind, const BooleanAlgebra& ba, Element param) {
  return ModalAlgebra(ba, extremal_operator(kind, ba, param));
}

ModalOperator operator_from_sublattice(const BooleanAlgebra& ba, std::span<const Element> d) {
  const ElementSet set = make_element_set(ba, d);
  const auto in = membership(ba, set);
  if (!in[0] || !in[ba.top().bits]) {
    throw PreconditionError("closed-element set must contain 0 and 1");
  }

  // Minimum of ↑b ∩ D: the meet of that set, when it belongs to D.
  std::vector<Element> least(ba.size());
  for (std::uint32_t b = 0; b < ba.size(); ++b) {
    std::uint32_t m = ba.top().bits;
    for (const Element x : set) {
      if (Element(b).leq(x)) m &= x.bits;
    }
    if (!in[m]) {
      throw NoClosureError("↑" + format_element(ba, Element(b)) + " ∩ D has no least element", b);
    }
    least[b] = Element(m);
  }
  // Meet closure follows from the minima above; join closure does not.
  for (const Element x : set) {
    for (const Element y : set) {
      if (!in[(x | y).bits]) throw PreconditionError("closed-element set is not a bounded sublattice");
    }
  }

  std::vector<Element> v;
  for (int i = 0; i < ba.atoms(); ++i) v.push_back(least[ba.atom(i).bits]);
  return ModalOperator(std::move(v));
}

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::IMA: return "IMA";
    case ClassKind::FMA: return "FMA";
    case ClassKind::FMA_proper: return "FMA_proper";
    case ClassKind::MMA: return "MMA";
    case ClassKind::GMA: return "GMA";
    case ClassKind::DMA: return "DMA";
    case ClassKind::IDENTITY: return "IDENTITY";
  }
  return "?";
}

std::string format_label(const BooleanAlgebra& ba, const ClassLabel& label) {
  std::string out = to_string(label.kind);
  if (label.parameter) out += "(" + format_element(ba, *label.parameter) + ")";
  return out;
}

bool in_family(std::span<const ClassLabel> labels, ClassKind kind) {
  return family_parameter(labels, kind).has_value() ||
         std::any_of(labels.begin(), labels.end(), [&](const ClassLabel& l) { return l.kind == kind; });
}

std::optional<Element> family_parameter(std::span<const ClassLabel> labels, ClassKind kind) {
  for (const ClassLabel& l : labels) {
    if (l.kind == kind || (kind == ClassKind::FMA && l.kind == ClassKind::FMA_proper)) return l.parameter;
  }
  return std::nullopt;
}

std::vector<ClassLabel> classify_algebra(const ModalAlgebra& a) {
  std::vector<ClassLabel> labels;
  if (!is_closure_algebra(a)) return labels;

  const BooleanAlgebra& ba = a.base();
  const ElementSet closed = closed_elements(a);
  const auto in = membership(ba, closed);
  const auto count = static_cast<std::uint32_t>(closed.size());
  const int n = ba.atoms();
  const Element top = ba.top();
  const bool everything_closed = count == ba.size();

  auto all_in = [&](const ElementSet& s) {
    return std::all_of(s.begin(), s.end(), [&](Element x) { return in[x.bits]; });
  };
  auto pow2 = [](int k) { return std::uint32_t{1} << k; };

  if (everything_closed) labels.push_back({ClassKind::IDENTITY, std::nullopt});
  if (count == 2) labels.push_back({ClassKind::DMA, std::nullopt});

  // Ideal algebra: closed = ↓a ∪ {1}.
  {
    Element param = top;
    if (!everything_closed) {
      param = Element{};
      for (const Element x : closed) {
        if (x != top) param = param | x;
      }
    }
    const std::uint32_t expected = pow2(param.atom_count()) + (param == top ? 0 : 1);
    if (count == expected && all_in(ba.down_set(param))) labels.push_back({ClassKind::IMA, param});
  }

  // Filter algebra: closed = {0} ∪ ↑a with ↑a != {1}; proper when a != 0.
  if (everything_closed) {
    labels.push_back({ClassKind::FMA, Element{}});
  } else {
    Element param = top;
    for (const Element x : closed) {
      if (!x.is_zero()) param = param & x;
    }
    if (param != top && !param.is_zero() && count == 1 + pow2(n - param.atom_count()) &&
        all_in(ba.up_set(param))) {
      labels.push_back({ClassKind::FMA_proper, param});
    }
  }

  // MaxId algebra: closed = {0, a, 1}, with a = 1 for the discriminator.
  if (count == 2) {
    labels.push_back({ClassKind::MMA, top});
  } else if (count == 3) {
    labels.push_back({ClassKind::MMA, closed[1]});
  }

  // ii algebra: closed = ↓b ∪ ↑b. The split point is unique unless f = 1'.
  if (everything_closed) {
    labels.push_back({ClassKind::GMA, Element{}});
  } else {
    for (const Element b : closed) {
      if (b.is_zero() || b == top) continue;
      const int k = b.atom_count();
      if (count != pow2(k) + pow2(n - k) - 1) continue;
      if (all_in(ba.down_set(b)) && all_in(ba.up_set(b))) {
        labels.push_back({ClassKind::GMA, b});
        break;
      }
    }
  }

  std::sort(labels.begin(), labels.end());
  return labels;
}

std::string to_string(Irreducibility kind) {
  switch (kind) {
    case Irreducibility::TwoElement: return "two-element";
    case Irreducibility::Simple: return "simple";
    case Irreducibility::SubdirectlyIrreducible: return "subdirectly irreducible";
    case Irreducibility::Neither: return "neither";
  }
  return "?";
}

IrreducibilityVerdict irreducibility(const ModalAlgebra& a) {
  if (!is_closure_algebra(a)) throw PreconditionError("irreducibility requires a closure algebra");
  const Element top = a.base().top();
  if (a.atoms() == 1) return {Irreducibility::TwoElement, top};

  const ElementSet closed = closed_elements(a);
  if (closed.size() == 2) return {Irreducibility::Simple, top};

  // Closed elements are closed under meets, so the meet of the nonzero ones
  // is the least nonzero closed element whenever it is itself nonzero.
  Element least = top;
  for (const Element x : closed) {
    if (!x.is_zero()) least = least & x;
  }
  if (least.is_zero()) return {Irreducibility::Neither, std::nullopt};
  return {Irreducibility::SubdirectlyIrreducible, least};
}

ConjugacyResult conjugate_check(const ModalAlgebra& a, const ModalOperator& g) {
  const ModalAlgebra other(a.base(), g);
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    const std::uint32_t fx = a.f(Element(x)).bits;
    for (std::uint32_t y = 0; y < a.size(); ++y) {
      const bool lhs = (fx & y) == 0;
      const bool rhs = (other.f(Element(y)).bits & x) == 0;
      if (lhs != rhs) return {false, std::make_pair(Element(x), Element(y))};
    }
  }
  return {};
}

bool satisfies_depth2_axiom(const ModalAlgebra& a) {
  const std::uint32_t top = a.base().top().bits;
  std::vector<std::uint32_t> inner(a.size());
  for (std::uint32_t y = 0; y < a.size(); ++y) {
    inner[y] = a.f(a.dual(Element(y))).bits & (top ^ y);
  }
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    const std::uint32_t gx = a.dual(Element(x)).bits;
    for (std::uint32_t y = 0; y < a.size(); ++y) {
      if (!a.f(Element(gx & inner[y])).leq(Element(x))) return false;
    }
  }
  return true;
}

Element project_to_quotient(const BooleanAlgebra& ba, Element c, Element x) {
  ba.check(c);
  ba.check(x);
  const std::uint32_t keep = ba.top().bits ^ c.bits;
  return Element(compress(x.bits, keep));
}

ModalAlgebra quotient(const ModalAlgebra& a, Element c) {
  const BooleanAlgebra& ba = a.base();
  ba.check(c);
  if (c == ba.top()) throw ParameterError("quotient by the top element is the trivial algebra");
  if (a.f(c) != c) throw PreconditionError("quotient requires a closed element");

  const std::uint32_t keep = ba.top().bits ^ c.bits;
  const BooleanAlgebra qb(std::popcount(keep));
  std::vector<Element> v;
  for (std::uint32_t m = keep; m != 0; m &= m - 1) {
    v.emplace_back(compress(a.f(Element(m & -m)).bits & keep, keep));
  }
  return ModalAlgebra(qb, ModalOperator(std::move(v)));
}

std::vector<Subalgebra> subalgebras(const ModalAlgebra& a) {
  const int n = a.atoms();
  if (n > 4) throw SizeError("subalgebra search is limited to 4 atoms");

  // Boolean subalgebras of a finite powerset correspond to partitions of the
  // atom set; enumerate them as restricted growth strings.
  std::vector<std::vector<int>> partitions;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto recurse = [&](auto&& self, int pos, int max_block) -> void {
    if (pos == n) {
      partitions.push_back(rgs);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, std::max(max_block, b));
    }
  };
  rgs[0] = 0;
  recurse(recurse, 1, 0);

  std::vector<Subalgebra> out;
  for (const auto& p : partitions) {
    const int blocks = *std::max_element(p.begin(), p.end()) + 1;
    std::vector<Element> block_atoms(static_cast<std::size_t>(blocks));
    for (int i = 0; i < n; ++i) {
      auto& b = block_atoms[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
      b = b | a.base().atom(i);
    }
    // Unions of blocks form the carrier; decode f(block) into block indices.
    auto as_blocks = [&](Element x) -> std::optional<std::uint32_t> {
      std::uint32_t code = 0;
      Element covered;
      for (int j = 0; j < blocks; ++j) {
        const Element b = block_atoms[static_cast<std::size_t>(j)];
        if ((x & b) == b) {
          code |= std::uint32_t{1} << j;
          covered = covered | b;
        }
      }
      if (covered != x) return std::nullopt;
      return code;
    };
    std::vector<Element> values;
    bool closed = true;
    for (const Element b : block_atoms) {
      const auto code = as_blocks(a.f(b));
      if (!code) {
        closed = false;
        break;
      }
      values.emplace_back(*code);
    }
    if (!closed) continue;

    ElementSet carrier;
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << blocks); ++code) {
      Element x;
      for (int j = 0; j < blocks; ++j) {
        if ((code >> j) & 1U) x = x | block_atoms[static_cast<std::size_t>(j)];
      }
      carrier.push_back(x);
    }
    std::sort(carrier.begin(), carrier.end());
    out.push_back(Subalgebra{std::move(carrier), block_atoms,
                             ModalAlgebra(BooleanAlgebra(blocks), ModalOperator(std::move(values)))});
  }
  std::stable_sort(out.begin(), out.end(), [](const Subalgebra& x, const Subalgebra& y) {
    return x.atoms.size() < y.atoms.size();
  });
  return out;
}

ModalAlgebra product(const ModalAlgebra& a, const ModalAlgebra& b) {
  const int n1 = a.atoms();
  const int n2 = b.atoms();
  if (n1 + n2 > BooleanAlgebra::kMaxAtoms) throw SizeError("product exceeds 20 atoms");
  std::vector<Element> v = a.op().atom_values();
  for (const Element x : b.op().atom_values()) v.emplace_back(x.bits << n1);
  return ModalAlgebra(BooleanAlgebra(n1 + n2), ModalOperator(std::move(v)));
}

ModalAlgebra build_kn(int n) {
  if (n < 1 || n > 6) throw SizeError("K_n is available for 1 <= n <= 6");
  const BooleanAlgebra ba(n);
  // i(x) = b_k where k counts the trailing atoms a_1..a_k below x, so
  // f(a_j) = -i(-a_j) = a_j + ... + a_n.
  std::vector<Element> v;
  for (int j = 0; j < n; ++j) v.emplace_back(ba.top().bits ^ ((std::uint32_t{1} << j) - 1));
  return ModalAlgebra(ba, ModalOperator(std::move(v)));
}

EmbeddingResult embeds(const ModalAlgebra& source, const ModalAlgebra& target) {
  if (target.atoms() > 4) throw SizeError("embedding search is limited to targets with 4 atoms");
  const int m = source.atoms();
  const int n = target.atoms();
  if (m > n) return {};

  // A Boolean embedding sends the source atoms to the blocks of an ordered
  // partition of the target atoms; enumerate the block assignment.
  std::vector<int> owner(static_cast<std::size_t>(n), 0);
  const auto total = static_cast<std::uint32_t>(std::pow(m, n) + 0.5);
  for (std::uint32_t code = 0; code < total; ++code) {
    std::uint32_t rest = code;
    for (int i = n - 1; i >= 0; --i) {
      owner[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint32_t>(m));
      rest /= static_cast<std::uint32_t>(m);
    }
    std::vector<Element> image(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) {
      auto& img = image[static_cast<std::size_t>(owner[static_cast<std::size_t>(i)])];
      img = img | target.base().atom(i);
    }
    if (std::any_of(image.begin(), image.end(), [](Element x) { return x.is_zero(); })) continue;

    auto h = [&](Element x) {
      Element out;
      for (std::uint32_t b = x.bits; b != 0; b &= b - 1) {
        out = out | image[static_cast<std::size_t>(std::countr_zero(b))];
      }
      return out;
    };
    bool commutes = true;
    for (int i = 0; i < m && commutes; ++i) {
      const Element at = source.base().atom(i);
      commutes = h(source.f(at)) == target.f(h(at));
    }
    if (commutes) return {true, std::move(image)};
  }
  return {};
}

}  // namespace depth2
