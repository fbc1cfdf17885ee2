#ifndef DEPTH2_MODAL_ALGEBRA_HPP
#define DEPTH2_MODAL_ALGEBRA_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "depth2/boolean_algebra.hpp"
#include "depth2/extremal_kind.hpp"

namespace depth2 {

/// A normal additive operator on a finite Boolean algebra, given by its
/// values on atoms. f(x) is the join of the values of the atoms below x,
/// which is the unique normal additive extension.
class ModalOperator {
 public:
  ModalOperator() = default;
  explicit ModalOperator(std::vector<Element> atom_values) : atom_values_(std::move(atom_values)) {}

  const std::vector<Element>& atom_values() const noexcept { return atom_values_; }
  int arity() const noexcept { return static_cast<int>(atom_values_.size()); }

  Element apply(Element x) const;

  friend bool operator==(const ModalOperator&, const ModalOperator&) = default;

 private:
  std::vector<Element> atom_values_;
};

/// An arbitrary unary map on a finite Boolean algebra, stored as a full
/// table indexed by element bits. Used where additivity is not guaranteed,
/// e.g. for duals of modal operators.
class OperatorTable {
 public:
  OperatorTable() = default;
  explicit OperatorTable(std::vector<Element> values) : values_(std::move(values)) {}

  Element operator()(Element x) const { return values_[x.bits]; }
  const std::vector<Element>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const OperatorTable&, const OperatorTable&) = default;

 private:
  std::vector<Element> values_;
};

/// A finite Boolean algebra with a modal operator. The full operator table
/// is derived once at construction.
class ModalAlgebra {
 public:
  ModalAlgebra(BooleanAlgebra base, ModalOperator op);

  const BooleanAlgebra& base() const noexcept { return base_; }
  const ModalOperator& op() const noexcept { return op_; }
  int atoms() const noexcept { return base_.atoms(); }
  std::uint32_t size() const noexcept { return base_.size(); }

  Element f(Element x) const { return table_[x.bits]; }
  /// f∂(x) = -f(-x).
  Element dual(Element x) const { return Element(base_.top().bits ^ table_[base_.top().bits ^ x.bits].bits); }

  OperatorTable table() const { return OperatorTable(table_); }

  friend bool operator==(const ModalAlgebra& a, const ModalAlgebra& b) {
    return a.base_ == b.base_ && a.op_ == b.op_;
  }

 private:
  BooleanAlgebra base_;
  ModalOperator op_;
  std::vector<Element> table_;
};

struct OperatorProperties {
  bool normal = false;
  bool additive = false;
  bool closure = false;
  bool interior = false;
  friend bool operator==(const OperatorProperties&, const OperatorProperties&) = default;
};

enum class ClassKind { IMA, FMA, FMA_proper, MMA, GMA, DMA, IDENTITY };

std::string to_string(ClassKind kind);

/// One family membership of a closure algebra. The parameter is the element
/// that generates the ideal, filter or split point of the family.
struct ClassLabel {
  ClassKind kind;
  std::optional<Element> parameter;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

std::string format_label(const BooleanAlgebra& ba, const ClassLabel& label);

/// True when the labels place the algebra in the family `kind`. FMA_proper
/// counts as FMA.
bool in_family(std::span<const ClassLabel> labels, ClassKind kind);
std::optional<Element> family_parameter(std::span<const ClassLabel> labels, ClassKind kind);

enum class Irreducibility { TwoElement, Simple, SubdirectlyIrreducible, Neither };

std::string to_string(Irreducibility kind);

struct IrreducibilityVerdict {
  Irreducibility kind;
  /// Least nonzero closed element, present whenever the algebra is SI.
  std::optional<Element> witness;

  bool subdirectly_irreducible() const { return kind != Irreducibility::Neither; }
};

struct ConjugacyResult {
  bool conjugate = true;
  std::optional<std::pair<Element, Element>> counterexample;
};

struct EmbeddingResult {
  bool embeds = false;
  /// Image of each atom of the source algebra.
  std::vector<Element> atom_images;
};

struct Subalgebra {
  /// Carrier as a subset of the ambient algebra.
  ElementSet carrier;
  /// Atoms of the subalgebra, as elements of the ambient algebra.
  std::vector<Element> atoms;
  /// The subalgebra re-indexed as a powerset algebra over its own atoms.
  ModalAlgebra algebra;
};

ModalOperator operator_from_atom_values(const BooleanAlgebra& ba, std::vector<Element> values);

OperatorProperties operator_properties(const ModalAlgebra& a);
/// Same checks for an externally supplied full table.
OperatorProperties operator_properties(const BooleanAlgebra& ba, const OperatorTable& table);

bool is_closure_algebra(const ModalAlgebra& a);

OperatorTable dual_operator(const ModalAlgebra& a);
OperatorTable dual_operator(const BooleanAlgebra& ba, const OperatorTable& table);

ElementSet closed_elements(const ModalAlgebra& a);
ElementSet open_elements(const ModalAlgebra& a);

ModalOperator identity_operator(const BooleanAlgebra& ba);
/// The unary discriminator: 0 maps to 0, everything else to 1.
ModalOperator discriminator(const BooleanAlgebra& ba);

/// The four extremal closure operators:
///   iu: x if x <= a, else 1
///   ui: 0 at 0, else a + x
///   uu: 0 at 0, a if 0 < x <= a, else 1   (requires a != 0)
///   ii: x if x <= a, else a + x
ModalOperator extremal_operator(ExtremalKind kind, const BooleanAlgebra& ba, Element param);
ModalAlgebra extremal_algebra(ExtremalKind kind, const BooleanAlgebra& ba, Element param);

/// The closure operator whose closed elements are exactly `d`, with
/// f(b) = min(↑b ∩ d).
ModalOperator operator_from_sublattice(const BooleanAlgebra& ba, std::span<const Element> d);

/// Every family label the algebra satisfies; empty for non-closure algebras.
std::vector<ClassLabel> classify_algebra(const ModalAlgebra& a);

IrreducibilityVerdict irreducibility(const ModalAlgebra& a);

/// Exhaustive check of f(a)·b = 0 <=> g(b)·a = 0. The counterexample is
/// the first failing (a, b) in increasing order.
ConjugacyResult conjugate_check(const ModalAlgebra& a, const ModalOperator& g);

/// f(f∂(x) · f(f∂(y)) · -y) <= x for all x, y.
bool satisfies_depth2_axiom(const ModalAlgebra& a);

/// The quotient by the closed ideal ↓c, computed as the relativization to -c.
ModalAlgebra quotient(const ModalAlgebra& a, Element c);
/// Projection of x onto the re-indexed quotient carrier.
Element project_to_quotient(const BooleanAlgebra& ba, Element c, Element x);

/// All modal subalgebras, for algebras with at most 4 atoms.
std::vector<Subalgebra> subalgebras(const ModalAlgebra& a);

ModalAlgebra product(const ModalAlgebra& a, const ModalAlgebra& b);

/// Closure form of K_n: the dual of the interior algebra on atoms a_1..a_n
/// whose open elements are the chain 0, a_1, a_1+a_2, ..., 1. Atom a_i is
/// stored at bit i-1.
ModalAlgebra build_kn(int n);

/// Search for an injective homomorphism from `source` into `target`
/// (target at most 4 atoms).
EmbeddingResult embeds(const ModalAlgebra& source, const ModalAlgebra& target);

}  // namespace depth2

#endif  // DEPTH2_MODAL_ALGEBRA_HPP
