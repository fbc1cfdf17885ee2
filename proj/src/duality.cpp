#include "depth2/duality.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "depth2/errors.hpp"

namespace depth2 {

ModalAlgebra complex_algebra(const Frame& f) {
  const int n = f.worlds();
  std::vector<Element> values(static_cast<std::size_t>(n));
  for (const auto& [x, y] : f.edges()) {
    values[static_cast<std::size_t>(y)] = values[static_cast<std::size_t>(y)] | Element(std::uint32_t{1} << x);
  }
  return ModalAlgebra(BooleanAlgebra(n), ModalOperator(std::move(values)));
}

Frame canonical_frame(const ModalAlgebra& a) {
  if (a.atoms() > Frame::kMaxWorlds) throw SizeError("canonical frames are limited to 12 atoms");
  // Row i collects the j with i ∈ f(a_j), i.e. the transpose of the atom values.
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(a.atoms()), 0);
  for (int j = 0; j < a.atoms(); ++j) {
    for (std::uint32_t m = a.op().atom_values()[static_cast<std::size_t>(j)].bits; m != 0; m &= m - 1) {
      rows[static_cast<std::size_t>(std::countr_zero(m))] |= std::uint32_t{1} << j;
    }
  }
  return Frame(a.atoms(), std::move(rows));
}

IsomorphismResult algebras_isomorphic(const ModalAlgebra& a, const ModalAlgebra& b) {
  if (a.atoms() > 7 || b.atoms() > 7) throw SizeError("isomorphism search is limited to 7 atoms");
  if (a.atoms() != b.atoms()) return {};
  const int n = a.atoms();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  auto image = [&](Element x) {
    std::uint32_t out = 0;
    for (std::uint32_t m = x.bits; m != 0; m &= m - 1) {
      out |= std::uint32_t{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
    }
    return Element(out);
  };
  const auto& fa = a.op().atom_values();
  const auto& fb = b.op().atom_values();
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      ok = image(fa[static_cast<std::size_t>(i)]) == fb[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    }
    if (ok) return {true, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}

}  // namespace depth2
