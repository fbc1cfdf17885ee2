#ifndef DEPTH2_SEMANTICS_HPP
#define DEPTH2_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "depth2/formula.hpp"
#include "depth2/frame.hpp"
#include "depth2/modal_algebra.hpp"

namespace depth2 {

/// World sets per variable.
using Valuation = std::map<std::string, std::uint32_t>;
/// Algebra elements per variable.
using Assignment = std::map<std::string, Element>;

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

struct SearchOptions {
  /// Upper bound on (2^n)^k, the number of valuations tried.
  std::uint64_t budget = kDefaultBudget;
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;
};

/// w ∈ v(<>φ) iff R(w) ∩ v(φ) ≠ ∅; [] is its dual. Throws BindingError.
std::uint32_t eval_in_model(const Frame& f, const Valuation& v, const Formula& phi);
/// ◇ is f, [] is f∂, connectives are the Boolean operations.
Element eval_in_algebra(const ModalAlgebra& a, const Assignment& v, const Formula& phi);

struct FrameValidity {
  bool valid = true;
  std::optional<Valuation> counterexample;
};

struct AlgebraCheck {
  bool holds = true;
  std::optional<Assignment> witness;
};

/// Valuations are searched in mixed-radix order (first variable least
/// significant); a counterexample is always the lowest failing one.
FrameValidity frame_validates(const Frame& f, const Formula& phi, const SearchOptions& opts = {});
AlgebraCheck algebra_validates(const ModalAlgebra& a, const Formula& phi, const SearchOptions& opts = {});

/// (φ1 = 1 & ... & φn = 1) => ψ = 1 under every assignment. Variables are
/// ordered by first occurrence in the premises, then the conclusion.
AlgebraCheck quasiidentity_holds(const ModalAlgebra& a, std::span<const Formula> premises,
                                 const Formula& conclusion, const SearchOptions& opts = {});

/// Whether some assignment sends every premise to 1. This is activeness
/// relative to one finite algebra, not the logic-level notion.
AlgebraCheck premises_active(const ModalAlgebra& a, std::span<const Formula> premises,
                             const SearchOptions& opts = {});

}  // namespace depth2

#endif  // DEPTH2_SEMANTICS_HPP
