#ifndef DEPTH2_FRAME_HPP
#define DEPTH2_FRAME_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "depth2/extremal_kind.hpp"

namespace depth2 {

/// A finite Kripke frame. Row w is the bitmask of R(w).
class Frame {
 public:
  static constexpr int kMaxWorlds = 12;

  /// Throws DomainError on a bad world count or a row outside the frame.
  Frame(int n_worlds, std::vector<std::uint32_t> rows);

  int worlds() const noexcept { return n_; }
  std::uint32_t all() const noexcept { return (std::uint32_t{1} << n_) - 1; }
  std::uint32_t row(int w) const { return rows_[static_cast<std::size_t>(w)]; }
  const std::vector<std::uint32_t>& rows() const noexcept { return rows_; }
  bool related(int x, int y) const { return (row(x) >> y) & 1U; }

  /// Edge list in row-major order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Frame&, const Frame&) = default;
  friend auto operator<=>(const Frame&, const Frame&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
};

Frame make_frame(int n_worlds, std::span<const std::pair<int, int>> edges);
Frame identity_frame(int n_worlds);
Frame universal_frame(int n_worlds);
/// Reflexive chain 0 R 1 R ... R n-1.
Frame chain_frame(int n_worlds);
Frame converse_frame(const Frame& f);
/// World x of `f` becomes world perm[x].
Frame relabel(const Frame& f, std::span<const int> perm);

enum class FrameCondition {
  serial,
  reflexive,
  transitive,
  symmetric,
  b2,
  dum,
  grz,
  m,
  convergent,
  dot3,
  r1,
  directed,
  quasiorder,
};

inline constexpr FrameCondition kFrameConditions[] = {
    FrameCondition::serial,     FrameCondition::reflexive, FrameCondition::transitive,
    FrameCondition::symmetric,  FrameCondition::b2,        FrameCondition::dum,
    FrameCondition::grz,        FrameCondition::m,         FrameCondition::convergent,
    FrameCondition::dot3,       FrameCondition::r1,        FrameCondition::directed,
    FrameCondition::quasiorder,
};

std::string to_string(FrameCondition c);
/// Accepts the condition names above and the axiom names D, T, 4, B, B2,
/// Dum, Grz, M, G2, H3, R1 (plus .1/.2/.3, G, H).
FrameCondition parse_frame_condition(const std::string& name);

struct ConditionResult {
  bool holds = true;
  /// Worlds that violate the condition, in the order of its quantifiers.
  std::vector<int> counterexample;
};

/// Dum, Grz and M throw PreconditionError unless `f` is a quasiorder.
ConditionResult frame_condition(const Frame& f, FrameCondition c);

bool is_quasiorder(const Frame& f);

struct ClusterPoset {
  /// World masks, indexed in order of their least world.
  std::vector<std::uint32_t> clusters;
  std::vector<int> cluster_of;
  /// above[c] has bit d set iff cluster c ≤ cluster d.
  std::vector<std::uint32_t> above;
  /// 1 for minimal clusters.
  std::vector<int> level;
  int depth = 0;

  bool simple(std::size_t c) const { return (clusters[c] & (clusters[c] - 1)) == 0; }
  bool maximal(std::size_t c) const { return above[c] == (std::uint32_t{1} << c); }
};

ClusterPoset cluster_poset(const Frame& f);

struct ExtremalMatch {
  ExtremalKind kind;
  std::uint32_t lower;  // U
  std::uint32_t upper;  // V
  friend bool operator==(const ExtremalMatch&, const ExtremalMatch&) = default;
};

/// Relation of the given kind for level masks U and V.
std::vector<std::uint32_t> extremal_rows(ExtremalKind kind, int n_worlds, std::uint32_t lower,
                                         std::uint32_t upper);
/// Every kind whose formula equals R, for quasiorders of depth exactly two.
std::vector<ExtremalMatch> classify_extremal(const Frame& f);
/// Worlds 0..u_size-1 form U.
Frame make_extremal(ExtremalKind kind, int u_size, int v_size);

inline constexpr int kMaxCanonicalWorlds = 7;

/// Relabeling minimizing the code sum of 2^(x*n+y) over related pairs.
Frame canonical_form(const Frame& f);
bool frames_isomorphic(const Frame& a, const Frame& b);

struct EnumerationOptions {
  bool quasiorder = false;
  std::optional<int> max_depth;
};

/// Pairwise non-isomorphic frames, ordered by canonical code. Quasiorders
/// up to 5 worlds; arbitrary relations up to 4.
std::vector<Frame> enumerate_frames(int n_worlds, const EnumerationOptions& options = {});

}  // namespace depth2

#endif  // DEPTH2_FRAME_HPP
