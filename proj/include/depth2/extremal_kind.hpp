#ifndef DEPTH2_EXTREMAL_KIND_HPP
#define DEPTH2_EXTREMAL_KIND_HPP

#include <string>

namespace depth2 {

/// Shape of a depth-two quasiorder with lower level U and upper level V.
/// The first letter is the restriction to U, the second to V: i = identity,
/// u = universal.
///   ii: (U×V) ∪ 1'
///   iu: (U×V) ∪ (V×V) ∪ 1'
///   ui: (U×V) ∪ (U×U) ∪ 1'
///   uu: (U×V) ∪ (U×U) ∪ (V×V)
enum class ExtremalKind { ii, iu, ui, uu };

inline constexpr ExtremalKind kExtremalKinds[] = {ExtremalKind::ii, ExtremalKind::iu,
                                                  ExtremalKind::ui, ExtremalKind::uu};

std::string to_string(ExtremalKind kind);
/// Throws LookupError for names other than ii, iu, ui, uu.
ExtremalKind parse_extremal_kind(const std::string& name);

}  // namespace depth2

#endif  // DEPTH2_EXTREMAL_KIND_HPP
