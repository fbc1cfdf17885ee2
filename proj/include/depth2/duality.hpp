#ifndef DEPTH2_DUALITY_HPP
#define DEPTH2_DUALITY_HPP

#include <vector>

#include "depth2/frame.hpp"
#include "depth2/modal_algebra.hpp"

namespace depth2 {

/// Powerset algebra of the worlds with f(X) = {x : R(x) ∩ X ≠ ∅}. On atoms,
/// f({w}) is the set of R-predecessors of w.
ModalAlgebra complex_algebra(const Frame& f);

/// Frame on the atoms with i R j iff atom i ≤ f(atom j). Limited to 12 atoms.
Frame canonical_frame(const ModalAlgebra& a);

struct IsomorphismResult {
  bool isomorphic = false;
  /// Atom i of the first algebra maps to atom permutation[i] of the second.
  std::vector<int> permutation;
};

/// Search over atom bijections, up to 7 atoms.
IsomorphismResult algebras_isomorphic(const ModalAlgebra& a, const ModalAlgebra& b);

}  // namespace depth2

#endif  // DEPTH2_DUALITY_HPP
