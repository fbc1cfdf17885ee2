#include "depth2/semantics.hpp"

#include <algorithm>
#include <vector>

#include "depth2/duality.hpp"
#include "depth2/errors.hpp"
#include "parallel.hpp"

namespace depth2 {

namespace {

enum class Op : std::uint8_t { Var, Top, Bottom, Not, And, Or, Implies, Iff, Diamond, Box };

struct Instr {
  Op op;
  int arg;
};

/// Postfix form of a formula over numbered variables.
struct Program {
  std::vector<Instr> code;
  std::size_t max_stack = 0;
};

/// A finite algebra as seen by the evaluator: top mask plus full f table.
struct Structure {
  int bits;
  std::uint32_t top;
  std::vector<std::uint32_t> table;
};

Structure structure_of(const ModalAlgebra& a) {
  Structure s{a.atoms(), a.base().top().bits, {}};
  s.table.reserve(a.size());
  const OperatorTable t = a.table();
  for (const Element x : t.values()) s.table.push_back(x.bits);
  return s;
}

void emit(const Formula& f, const std::vector<std::string>& vars, Program& p, std::size_t depth) {
  switch (f.kind()) {
    case NodeKind::Var: {
      const auto it = std::find(vars.begin(), vars.end(), f.name());
      p.code.push_back({Op::Var, static_cast<int>(it - vars.begin())});
      p.max_stack = std::max(p.max_stack, depth + 1);
      return;
    }
    case NodeKind::Top: p.code.push_back({Op::Top, 0}); p.max_stack = std::max(p.max_stack, depth + 1); return;
    case NodeKind::Bottom: p.code.push_back({Op::Bottom, 0}); p.max_stack = std::max(p.max_stack, depth + 1); return;
    default: break;
  }
  emit(f.left(), vars, p, depth);
  if (f.is_binary()) emit(f.right(), vars, p, depth + 1);
  static constexpr Op kOps[] = {Op::Var, Op::Top, Op::Bottom, Op::Not, Op::And,
                                Op::Or, Op::Implies, Op::Iff, Op::Diamond, Op::Box};
  p.code.push_back({kOps[static_cast<int>(f.kind())], 0});
}

Program compile(const Formula& f, const std::vector<std::string>& vars) {
  Program p;
  emit(f, vars, p, 0);
  return p;
}

std::uint32_t run(const Program& p, const Structure& s, const std::uint32_t* vals, std::uint32_t* stack) {
  std::size_t sp = 0;
  for (const Instr& in : p.code) {
    switch (in.op) {
      case Op::Var: stack[sp++] = vals[in.arg]; break;
      case Op::Top: stack[sp++] = s.top; break;
      case Op::Bottom: stack[sp++] = 0; break;
      case Op::Not: stack[sp - 1] ^= s.top; break;
      case Op::Diamond: stack[sp - 1] = s.table[stack[sp - 1]]; break;
      case Op::Box: stack[sp - 1] = s.top ^ s.table[s.top ^ stack[sp - 1]]; break;
      case Op::And: --sp; stack[sp - 1] &= stack[sp]; break;
      case Op::Or: --sp; stack[sp - 1] |= stack[sp]; break;
      case Op::Implies: --sp; stack[sp - 1] = ((s.top ^ stack[sp - 1]) | stack[sp]); break;
      case Op::Iff: --sp; stack[sp - 1] = s.top ^ (stack[sp - 1] ^ stack[sp]); break;
    }
  }
  return stack[0];
}

std::uint64_t search_size(int bits, std::size_t var_count, std::uint64_t budget) {
  const std::uint64_t exponent = static_cast<std::uint64_t>(bits) * var_count;
  if (exponent >= 63 || (std::uint64_t{1} << exponent) > budget) {
    throw BudgetError("search over (2^" + std::to_string(bits) + ")^" + std::to_string(var_count) +
                      " valuations exceeds the budget of " + std::to_string(budget));
  }
  return std::uint64_t{1} << exponent;
}

void decode(std::uint64_t index, int bits, std::uint32_t top, std::size_t k, std::uint32_t* vals) {
  for (std::size_t j = 0; j < k; ++j) {
    vals[j] = static_cast<std::uint32_t>(index >> (static_cast<std::uint64_t>(bits) * j)) & top;
  }
}

/// Evaluation buffers for one search, reused per thread.
struct Scratch {
  std::vector<std::uint32_t> vals;
  std::vector<std::uint32_t> stack;
};

Scratch& scratch(std::size_t k, std::size_t stack) {
  thread_local Scratch s;
  if (s.vals.size() < k) s.vals.resize(k);
  if (s.stack.size() < stack) s.stack.resize(stack);
  return s;
}

std::vector<std::string> variables_of(std::span<const Formula> fs) {
  std::vector<std::string> out;
  for (const Formula& f : fs) {
    for (std::string& v : variables(f)) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
  }
  return out;
}

struct Search {
  Structure s;
  std::vector<std::string> vars;
  std::vector<Program> programs;
  std::size_t stack = 1;
  std::uint64_t total = 0;
};

Search prepare(const ModalAlgebra& a, std::span<const Formula> fs, const SearchOptions& opts) {
  Search q{structure_of(a), variables_of(fs), {}, 1, 0};
  for (const Formula& f : fs) {
    q.programs.push_back(compile(f, q.vars));
    q.stack = std::max(q.stack, q.programs.back().max_stack);
  }
  q.total = search_size(q.s.bits, q.vars.size(), opts.budget);
  return q;
}

/// Lowest index whose valuation makes pred(values of programs) true.
template <typename Pred>
std::optional<std::uint64_t> first_index(const Search& q, const SearchOptions& opts, Pred pred) {
  const std::size_t k = q.vars.size();
  return detail::parallel_first(q.total, opts.workers, [&](std::uint64_t i) {
    Scratch& sc = scratch(k, q.stack);
    decode(i, q.s.bits, q.s.top, k, sc.vals.data());
    return pred([&](std::size_t prog) { return run(q.programs[prog], q.s, sc.vals.data(), sc.stack.data()); });
  });
}

Assignment assignment_at(const Search& q, std::uint64_t index) {
  std::vector<std::uint32_t> vals(q.vars.size());
  decode(index, q.s.bits, q.s.top, vals.size(), vals.data());
  Assignment out;
  for (std::size_t j = 0; j < vals.size(); ++j) out[q.vars[j]] = Element(vals[j]);
  return out;
}

std::uint32_t evaluate(const Structure& s, const Formula& phi, const std::vector<std::uint32_t>& vals,
                       const std::vector<std::string>& vars) {
  const Program p = compile(phi, vars);
  std::vector<std::uint32_t> stack(std::max<std::size_t>(p.max_stack, 1));
  return run(p, s, vals.data(), stack.data());
}

}  // namespace

std::uint32_t eval_in_model(const Frame& f, const Valuation& v, const Formula& phi) {
  const Structure s = structure_of(complex_algebra(f));
  const std::vector<std::string> vars = variables(phi);
  std::vector<std::uint32_t> vals;
  for (const std::string& name : vars) {
    const auto it = v.find(name);
    if (it == v.end()) throw BindingError("variable '" + name + "' is not assigned");
    if ((it->second & ~s.top) != 0) throw DomainError("valuation of '" + name + "' names a world outside the frame");
    vals.push_back(it->second);
  }
  return evaluate(s, phi, vals, vars);
}

Element eval_in_algebra(const ModalAlgebra& a, const Assignment& v, const Formula& phi) {
  const Structure s = structure_of(a);
  const std::vector<std::string> vars = variables(phi);
  std::vector<std::uint32_t> vals;
  for (const std::string& name : vars) {
    const auto it = v.find(name);
    if (it == v.end()) throw BindingError("variable '" + name + "' is not assigned");
    a.base().check(it->second);
    vals.push_back(it->second.bits);
  }
  return Element(evaluate(s, phi, vals, vars));
}

FrameValidity frame_validates(const Frame& f, const Formula& phi, const SearchOptions& opts) {
  const AlgebraCheck r = algebra_validates(complex_algebra(f), phi, opts);
  FrameValidity out{r.holds, std::nullopt};
  if (r.witness) {
    Valuation v;
    for (const auto& [name, x] : *r.witness) v[name] = x.bits;
    out.counterexample = std::move(v);
  }
  return out;
}

AlgebraCheck algebra_validates(const ModalAlgebra& a, const Formula& phi, const SearchOptions& opts) {
  const Formula fs[] = {phi};
  const Search q = prepare(a, fs, opts);
  const std::uint32_t top = q.s.top;
  const auto hit = first_index(q, opts, [&](auto value) { return value(0) != top; });
  if (!hit) return {};
  return {false, assignment_at(q, *hit)};
}

AlgebraCheck quasiidentity_holds(const ModalAlgebra& a, std::span<const Formula> premises,
                                 const Formula& conclusion, const SearchOptions& opts) {
  std::vector<Formula> fs(premises.begin(), premises.end());
  fs.push_back(conclusion);
  const Search q = prepare(a, fs, opts);
  const std::uint32_t top = q.s.top;
  const std::size_t n = premises.size();
  const auto hit = first_index(q, opts, [&](auto value) {
    for (std::size_t i = 0; i < n; ++i) {
      if (value(i) != top) return false;
    }
    return value(n) != top;
  });
  if (!hit) return {};
  return {false, assignment_at(q, *hit)};
}

AlgebraCheck premises_active(const ModalAlgebra& a, std::span<const Formula> premises, const SearchOptions& opts) {
  const Search q = prepare(a, premises, opts);
  const std::uint32_t top = q.s.top;
  const auto hit = first_index(q, opts, [&](auto value) {
    for (std::size_t i = 0; i < premises.size(); ++i) {
      if (value(i) != top) return false;
    }
    return true;
  });
  if (!hit) return {false, std::nullopt};
  return {true, assignment_at(q, *hit)};
}

}  // namespace depth2
