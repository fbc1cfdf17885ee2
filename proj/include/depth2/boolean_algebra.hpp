#ifndef DEPTH2_BOOLEAN_ALGEBRA_HPP
#define DEPTH2_BOOLEAN_ALGEBRA_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace depth2 {

/// An element of a finite powerset algebra, stored as a bitmask over atom
/// indices. Bit i set means atom i lies below the element.
struct Element {
  std::uint32_t bits = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }
  constexpr bool leq(Element other) const { return (bits & ~other.bits) == 0; }
  constexpr bool contains_atom(int i) const { return (bits >> i) & 1U; }
  constexpr int atom_count() const { return std::popcount(bits); }

  friend constexpr Element operator|(Element a, Element b) { return Element(a.bits | b.bits); }
  friend constexpr Element operator&(Element a, Element b) { return Element(a.bits & b.bits); }
  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Sorted, duplicate-free set of elements of one ambient algebra.
using ElementSet = std::vector<Element>;

/// Flags reported by subset_class.
struct SubsetClass {
  bool is_ideal = false;
  bool is_filter = false;
  bool is_bounded_sublattice = false;
  friend bool operator==(const SubsetClass&, const SubsetClass&) = default;
};

/// The powerset algebra over n indexed atoms, 1 <= n <= 20. Isomorphic
/// finite Boolean algebras are identified with this representative.
class BooleanAlgebra {
 public:
  static constexpr int kMaxAtoms = 20;

  explicit BooleanAlgebra(int n_atoms);

  int atoms() const noexcept { return n_atoms_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << n_atoms_; }

  Element bottom() const noexcept { return Element{}; }
  Element top() const noexcept { return Element(size() - 1); }
  Element atom(int i) const;

  bool contains(Element x) const noexcept { return x.bits < size(); }
  /// Throws DomainError when x lies outside the algebra.
  void check(Element x) const;

  Element join(Element x, Element y) const;
  Element meet(Element x, Element y) const;
  Element complement(Element x) const;
  bool leq(Element x, Element y) const;

  /// All elements in increasing bitmask order.
  ElementSet elements() const;
  /// The principal ideal and filter generated by a.
  ElementSet down_set(Element a) const;
  ElementSet up_set(Element a) const;

  friend bool operator==(const BooleanAlgebra&, const BooleanAlgebra&) = default;

 private:
  int n_atoms_;
};

BooleanAlgebra powerset_algebra(int n_atoms);

/// Normalizes an arbitrary list into a sorted, duplicate-free ElementSet,
/// checking each member against the ambient algebra.
ElementSet make_element_set(const BooleanAlgebra& ba, std::span<const Element> members);

/// Membership bitmap over all 2^n elements.
std::vector<bool> membership(const BooleanAlgebra& ba, std::span<const Element> set);

SubsetClass subset_class(const BooleanAlgebra& ba, std::span<const Element> set);

/// Human-readable element: "0", "1", or a sum of atoms such as "a0+a2".
std::string format_element(const BooleanAlgebra& ba, Element x);

}  // namespace depth2

#endif  // DEPTH2_BOOLEAN_ALGEBRA_HPP
