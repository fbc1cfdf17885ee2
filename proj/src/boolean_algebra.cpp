#include "depth2/boolean_algebra.hpp"

#include <algorithm>

#include "depth2/errors.hpp"

namespace depth2 {

BooleanAlgebra::BooleanAlgebra(int n_atoms) : n_atoms_(n_atoms) {
  if (n_atoms < 1 || n_atoms > kMaxAtoms) {
    throw SizeError("Boolean algebra needs between 1 and 20 atoms, got " +
                    std::to_string(n_atoms));
  }
}

Element BooleanAlgebra::atom(int i) const {
  if (i < 0 || i >= n_atoms_) {
    throw DomainError("atom index " + std::to_string(i) + " out of range");
  }
  return Element(std::uint32_t{1} << i);
}

void BooleanAlgebra::check(Element x) const {
  if (!contains(x)) {
    throw DomainError("element " + std::to_string(x.bits) + " outside algebra with " +
                      std::to_string(n_atoms_) + " atoms");
  }
}

Element BooleanAlgebra::join(Element x, Element y) const {
  check(x);
  check(y);
  return x | y;
}

Element BooleanAlgebra::meet(Element x, Element y) const {
  check(x);
  check(y);
  return x & y;
}

Element BooleanAlgebra::complement(Element x) const {
  check(x);
  return Element(top().bits ^ x.bits);
}

bool BooleanAlgebra::leq(Element x, Element y) const {
  return meet(x, y) == x;
}

ElementSet BooleanAlgebra::elements() const {
  ElementSet out;
  out.reserve(size());
  for (std::uint32_t b = 0; b < size(); ++b) out.emplace_back(b);
  return out;
}

ElementSet BooleanAlgebra::down_set(Element a) const {
  check(a);
  ElementSet out;
  // Submask enumeration visits every x <= a; collect then sort.
  for (std::uint32_t s = a.bits;; s = (s - 1) & a.bits) {
    out.emplace_back(s);
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet BooleanAlgebra::up_set(Element a) const {
  check(a);
  ElementSet out;
  for (const Element x : down_set(complement(a))) out.push_back(x | a);
  std::sort(out.begin(), out.end());
  return out;
}

BooleanAlgebra powerset_algebra(int n_atoms) { return BooleanAlgebra(n_atoms); }

ElementSet make_element_set(const BooleanAlgebra& ba, std::span<const Element> members) {
  ElementSet out(members.begin(), members.end());
  for (const Element x : out) ba.check(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<bool> membership(const BooleanAlgebra& ba, std::span<const Element> set) {
  std::vector<bool> in(ba.size(), false);
  for (const Element x : set) {
    ba.check(x);
    in[x.bits] = true;
  }
  return in;
}

SubsetClass subset_class(const BooleanAlgebra& ba, std::span<const Element> set) {
  SubsetClass flags;
  if (set.empty()) return flags;
  const auto in = membership(ba, set);

  bool join_closed = true;
  bool meet_closed = true;
  for (const Element x : set) {
    for (const Element y : set) {
      join_closed = join_closed && in[(x | y).bits];
      meet_closed = meet_closed && in[(x & y).bits];
    }
  }

  bool down_closed = true;
  bool up_closed = true;
  const std::uint32_t top = ba.top().bits;
  for (const Element x : set) {
    for (std::uint32_t s = x.bits;; s = (s - 1) & x.bits) {
      down_closed = down_closed && in[s];
      if (s == 0 || !down_closed) break;
    }
    const std::uint32_t rest = top ^ x.bits;
    for (std::uint32_t s = rest;; s = (s - 1) & rest) {
      up_closed = up_closed && in[s | x.bits];
      if (s == 0 || !up_closed) break;
    }
  }

  flags.is_ideal = down_closed && join_closed;
  flags.is_filter = up_closed && meet_closed;
  flags.is_bounded_sublattice = in[0] && in[top] && join_closed && meet_closed;
  return flags;
}

std::string format_element(const BooleanAlgebra& ba, Element x) {
  if (x.is_zero()) return "0";
  if (x == ba.top()) return "1";
  std::string out;
  for (int i = 0; i < ba.atoms(); ++i) {
    if (!x.contains_atom(i)) continue;
    if (!out.empty()) out += '+';
    out += "a" + std::to_string(i);
  }
  return out;
}

}  // namespace depth2
