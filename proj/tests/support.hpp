#ifndef DEPTH2_TESTS_SUPPORT_HPP
#define DEPTH2_TESTS_SUPPORT_HPP

// Shared helpers for the unit and acceptance tests. The oracles here are
// deliberately naive and share no code with the library beyond its types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "depth2/boolean_algebra.hpp"
#include "depth2/formula.hpp"
#include "depth2/frame.hpp"
#include "depth2/modal_algebra.hpp"

namespace depth2::testing {

// ---------------------------------------------------------------------------
// Small constructors

inline Element el(std::uint32_t bits) { return Element(bits); }

inline ModalAlgebra algebra(int atoms, std::vector<std::uint32_t> values) {
  std::vector<Element> v;
  for (std::uint32_t b : values) v.push_back(Element(b));
  return ModalAlgebra(powerset_algebra(atoms), ModalOperator(std::move(v)));
}

/// F₂⁺ on two atoms: a0 closed, a1 sent to top.
inline ModalAlgebra f2_plus() { return algebra(2, {0b01, 0b11}); }

inline ModalAlgebra two_element() { return algebra(1, {0b1}); }

inline Frame f2() { return chain_frame(2); }

// ---------------------------------------------------------------------------
// Random formulas

class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint32_t seed) : rng_(seed) {}

  /// A formula whose formula_depth is at most max_depth (atoms count 1).
  Formula operator()(int max_depth) { return build(max_depth); }

 private:
  Formula leaf() {
    static const char* const kNames[] = {"p", "q", "r", "s", "x1", "y_2"};
    switch (pick(8)) {
      case 0: return Formula::top();
      case 1: return Formula::bottom();
      default: return Formula::var(kNames[pick(6)]);
    }
  }

  Formula build(int depth) {
    if (depth <= 1 || pick(5) == 0) return leaf();
    switch (pick(8)) {
      case 0: return Formula::negation(build(depth - 1));
      case 1: return Formula::diamond(build(depth - 1));
      case 2: return Formula::box(build(depth - 1));
      case 3: return Formula::conj(build(depth - 1), build(depth - 1));
      case 4: return Formula::disj(build(depth - 1), build(depth - 1));
      case 5: return Formula::implies(build(depth - 1), build(depth - 1));
      case 6: return Formula::iff(build(depth - 1), build(depth - 1));
      default: return leaf();
    }
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  std::mt19937 rng_;
};

// ---------------------------------------------------------------------------
// Relation helpers over adjacency matrices

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const Frame& f) {
  const int n = f.worlds();
  Matrix m(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) m[x][y] = f.related(x, y);
  }
  return m;
}

inline Frame frame_of(const Matrix& m) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(m.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (m[x][y]) edges.emplace_back(x, y);
    }
  }
  return make_frame(n, edges);
}

inline bool matrix_is_quasiorder(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!m[x][x]) return false;
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (m[x][y] && m[y][z] && !m[x][z]) return false;
      }
    }
  }
  return true;
}

inline bool matrices_isomorphic(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  auto degrees = [n](const Matrix& m) {
    std::vector<std::pair<int, int>> d(n, {0, 0});
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (m[x][y]) {
          ++d[x].first;
          ++d[y].second;
        }
      }
    }
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) ok = a[x][y] == b[p[x]][p[y]];
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Every n×n matrix, filtered by `keep`, then reduced to one representative
/// per isomorphism class by pairwise comparison.
template <typename Keep>
std::vector<Matrix> brute_force_classes(int n, Keep keep) {
  std::vector<Matrix> reps;
  const int cells = n * n;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    Matrix m(n, std::vector<bool>(n, false));
    for (int c = 0; c < cells; ++c) m[c / n][c % n] = (code >> c) & 1U;
    if (!keep(m)) continue;
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Matrix& r) { return matrices_isomorphic(r, m); });
    if (!seen) reps.push_back(std::move(m));
  }
  return reps;
}

/// Same oracle for quasiorders, but only over matrices with a full diagonal
/// so that five worlds stay cheap.
inline std::vector<Matrix> brute_force_quasiorders(int n) {
  std::vector<std::pair<int, int>> cells;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) cells.emplace_back(x, y);
    }
  }
  std::vector<Matrix> reps;
  Matrix m(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) m[x][x] = true;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells.size()); ++code) {
    for (std::size_t c = 0; c < cells.size(); ++c) m[cells[c].first][cells[c].second] = (code >> c) & 1U;
    if (!matrix_is_quasiorder(m)) continue;
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Matrix& r) { return matrices_isomorphic(r, m); });
    if (!seen) reps.push_back(m);
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Naive model evaluation straight from the satisfaction clauses

inline bool holds_at(const Matrix& r, const std::map<std::string, std::set<int>>& v, const Formula& phi, int w) {
  const int n = static_cast<int>(r.size());
  switch (phi.kind()) {
    case NodeKind::Var: return v.at(phi.name()).count(w) > 0;
    case NodeKind::Top: return true;
    case NodeKind::Bottom: return false;
    case NodeKind::Not: return !holds_at(r, v, phi.left(), w);
    case NodeKind::And: return holds_at(r, v, phi.left(), w) && holds_at(r, v, phi.right(), w);
    case NodeKind::Or: return holds_at(r, v, phi.left(), w) || holds_at(r, v, phi.right(), w);
    case NodeKind::Implies: return !holds_at(r, v, phi.left(), w) || holds_at(r, v, phi.right(), w);
    case NodeKind::Iff: return holds_at(r, v, phi.left(), w) == holds_at(r, v, phi.right(), w);
    case NodeKind::Diamond:
      for (int u = 0; u < n; ++u) {
        if (r[w][u] && holds_at(r, v, phi.left(), u)) return true;
      }
      return false;
    case NodeKind::Box:
      for (int u = 0; u < n; ++u) {
        if (r[w][u] && !holds_at(r, v, phi.left(), u)) return false;
      }
      return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Subalgebra oracle: scan every subset of the carrier

inline std::set<std::vector<std::uint32_t>> brute_force_subalgebra_carriers(const ModalAlgebra& a) {
  const std::uint32_t size = a.size();
  const std::uint32_t top = size - 1;
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << size); ++s) {
    auto in = [&](std::uint32_t x) { return ((s >> x) & 1U) != 0; };
    if (!in(0) || !in(top)) continue;
    bool ok = true;
    for (std::uint32_t x = 0; x < size && ok; ++x) {
      if (!in(x)) continue;
      ok = in(top ^ x) && in(a.f(Element(x)).bits);
      for (std::uint32_t y = 0; y < size && ok; ++y) {
        if (in(y)) ok = in(x | y);
      }
    }
    if (!ok) continue;
    std::vector<std::uint32_t> carrier;
    for (std::uint32_t x = 0; x < size; ++x) {
      if (in(x)) carrier.push_back(x);
    }
    out.insert(std::move(carrier));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed-element oracle

inline std::vector<std::uint32_t> fixpoints(const ModalAlgebra& a) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (a.f(Element(x)).bits == x) out.push_back(x);
  }
  return out;
}

/// Every closure operator on n atoms, enumerated from atom-value tables.
inline std::vector<ModalAlgebra> all_closure_algebras(int n) {
  std::vector<ModalAlgebra> out;
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<std::uint32_t> v(n, 0);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= size;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<std::uint32_t>(c % size);
      c /= size;
    }
    ModalAlgebra a = algebra(n, v);
    bool closure = true;
    for (std::uint32_t x = 0; x < size && closure; ++x) {
      const std::uint32_t fx = a.f(Element(x)).bits;
      closure = (x & ~fx) == 0 && a.f(Element(fx)).bits == fx;
    }
    if (closure) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace depth2::testing

#endif  // DEPTH2_TESTS_SUPPORT_HPP
