#include "depth2/frame.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "depth2/errors.hpp"

namespace depth2 {

namespace {

std::uint32_t bit(int i) { return std::uint32_t{1} << i; }

std::uint64_t relation_code(const std::vector<std::uint32_t>& rows, std::span<const int> perm) {
  const auto n = static_cast<int>(rows.size());
  std::uint64_t code = 0;
  for (int x = 0; x < n; ++x) {
    const int px = perm[static_cast<std::size_t>(x)];
    for (std::uint32_t m = rows[static_cast<std::size_t>(x)]; m != 0; m &= m - 1) {
      const int y = std::countr_zero(m);
      code |= std::uint64_t{1} << (px * n + perm[static_cast<std::size_t>(y)]);
    }
  }
  return code;
}

std::vector<std::uint32_t> rows_from_code(std::uint64_t code, int n) {
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    rows[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>((code >> (x * n)) & ((std::uint64_t{1} << n) - 1));
  }
  return rows;
}

std::uint64_t canonical_code(const std::vector<std::uint32_t>& rows) {
  const auto n = static_cast<int>(rows.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, relation_code(rows, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

ConditionResult fail(std::vector<int> worlds) { return {false, std::move(worlds)}; }

void require_quasiorder(const Frame& f, FrameCondition c) {
  if (!is_quasiorder(f)) throw PreconditionError(to_string(c) + " is only defined for quasiorders");
}

}  // namespace

Frame::Frame(int n_worlds, std::vector<std::uint32_t> rows) : n_(n_worlds), rows_(std::move(rows)) {
  if (n_ < 1 || n_ > kMaxWorlds) throw DomainError("frames have 1 to 12 worlds");
  if (static_cast<int>(rows_.size()) != n_) throw DomainError("row count does not match world count");
  for (const std::uint32_t r : rows_) {
    if ((r & ~all()) != 0) throw DomainError("relation row refers to a world outside the frame");
  }
}

std::vector<std::pair<int, int>> Frame::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x) {
    for (std::uint32_t m = row(x); m != 0; m &= m - 1) out.emplace_back(x, std::countr_zero(m));
  }
  return out;
}

Frame make_frame(int n_worlds, std::span<const std::pair<int, int>> edges) {
  if (n_worlds < 1 || n_worlds > Frame::kMaxWorlds) throw DomainError("frames have 1 to 12 worlds");
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n_worlds), 0);
  for (const auto& [x, y] : edges) {
    if (x < 0 || y < 0 || x >= n_worlds || y >= n_worlds) {
      throw DomainError("edge (" + std::to_string(x) + "," + std::to_string(y) + ") outside " +
                        std::to_string(n_worlds) + " worlds");
    }
    rows[static_cast<std::size_t>(x)] |= bit(y);
  }
  return Frame(n_worlds, std::move(rows));
}

Frame identity_frame(int n_worlds) {
  std::vector<std::uint32_t> rows;
  for (int x = 0; x < n_worlds; ++x) rows.push_back(bit(x));
  return Frame(n_worlds, std::move(rows));
}

Frame universal_frame(int n_worlds) {
  return Frame(n_worlds, std::vector<std::uint32_t>(static_cast<std::size_t>(std::max(n_worlds, 0)),
                                                    bit(n_worlds) - 1));
}

Frame chain_frame(int n_worlds) {
  std::vector<std::uint32_t> rows;
  for (int x = 0; x < n_worlds; ++x) rows.push_back((bit(n_worlds) - 1) & ~(bit(x) - 1));
  return Frame(n_worlds, std::move(rows));
}

Frame converse_frame(const Frame& f) {
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(f.worlds()), 0);
  for (const auto& [x, y] : f.edges()) rows[static_cast<std::size_t>(y)] |= bit(x);
  return Frame(f.worlds(), std::move(rows));
}

Frame relabel(const Frame& f, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != f.worlds()) throw DomainError("permutation size mismatch");
  std::vector<std::uint32_t> rows(perm.size(), 0);
  for (const auto& [x, y] : f.edges()) {
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] |= bit(perm[static_cast<std::size_t>(y)]);
  }
  return Frame(f.worlds(), std::move(rows));
}

std::string to_string(FrameCondition c) {
  switch (c) {
    case FrameCondition::serial: return "serial";
    case FrameCondition::reflexive: return "reflexive";
    case FrameCondition::transitive: return "transitive";
    case FrameCondition::symmetric: return "symmetric";
    case FrameCondition::b2: return "b2";
    case FrameCondition::dum: return "dum";
    case FrameCondition::grz: return "grz";
    case FrameCondition::m: return "m";
    case FrameCondition::convergent: return "convergent";
    case FrameCondition::dot3: return "dot3";
    case FrameCondition::r1: return "r1";
    case FrameCondition::directed: return "directed";
    case FrameCondition::quasiorder: return "quasiorder";
  }
  return "?";
}

FrameCondition parse_frame_condition(const std::string& name) {
  static const std::map<std::string, FrameCondition> aliases = {
      {"D", FrameCondition::serial},      {"T", FrameCondition::reflexive},
      {"4", FrameCondition::transitive},  {"B", FrameCondition::symmetric},
      {"B2", FrameCondition::b2},         {"Dum", FrameCondition::dum},
      {"Grz", FrameCondition::grz},       {"M", FrameCondition::m},
      {".1", FrameCondition::m},          {"G", FrameCondition::convergent},
      {"G2", FrameCondition::convergent}, {".2", FrameCondition::convergent},
      {"H", FrameCondition::dot3},        {"H3", FrameCondition::dot3},
      {".3", FrameCondition::dot3},       {"R1", FrameCondition::r1},
  };
  for (const FrameCondition c : kFrameConditions) {
    if (to_string(c) == name) return c;
  }
  if (const auto it = aliases.find(name); it != aliases.end()) return it->second;
  throw LookupError("unknown frame condition '" + name + "'");
}

bool is_quasiorder(const Frame& f) {
  for (int x = 0; x < f.worlds(); ++x) {
    if (!f.related(x, x)) return false;
    for (std::uint32_t m = f.row(x); m != 0; m &= m - 1) {
      if ((f.row(std::countr_zero(m)) & ~f.row(x)) != 0) return false;
    }
  }
  return true;
}

ConditionResult frame_condition(const Frame& f, FrameCondition c) {
  const int n = f.worlds();
  auto R = [&](int x, int y) { return f.related(x, y); };

  switch (c) {
    case FrameCondition::serial:
      for (int x = 0; x < n; ++x) {
        if (f.row(x) == 0) return fail({x});
      }
      return {};
    case FrameCondition::reflexive:
      for (int x = 0; x < n; ++x) {
        if (!R(x, x)) return fail({x});
      }
      return {};
    case FrameCondition::transitive:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (R(x, y) && R(y, z) && !R(x, z)) return fail({x, y, z});
      return {};
    case FrameCondition::symmetric:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (R(x, y) && !R(y, x)) return fail({x, y});
      return {};
    case FrameCondition::b2:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (R(x, y) && R(y, z) && !R(y, x) && !R(z, y)) return fail({x, y, z});
      return {};
    case FrameCondition::dum: {
      // A proper cluster seen from x must be seen from all of R(x): it is
      // the final cluster of every generated subframe containing it.
      require_quasiorder(f, c);
      const ClusterPoset cp = cluster_poset(f);
      for (int x = 0; x < n; ++x) {
        for (std::size_t k = 0; k < cp.clusters.size(); ++k) {
          const std::uint32_t members = cp.clusters[k];
          if (cp.simple(k) || (f.row(x) & members) == 0) continue;
          for (std::uint32_t m = f.row(x); m != 0; m &= m - 1) {
            const int z = std::countr_zero(m);
            if ((f.row(z) & members) == 0) return fail({x, std::countr_zero(members), z});
          }
        }
      }
      return {};
    }
    case FrameCondition::grz: {
      // On finite quasiorders an infinite ascending chain must cycle inside
      // a proper cluster.
      require_quasiorder(f, c);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (x != y && R(x, y) && R(y, x)) return fail({x, y});
      return {};
    }
    case FrameCondition::m: {
      require_quasiorder(f, c);
      for (int x = 0; x < n; ++x) {
        bool found = false;
        for (std::uint32_t m = f.row(x); m != 0 && !found; m &= m - 1) {
          const int y = std::countr_zero(m);
          found = f.row(y) == bit(y);
        }
        if (!found) return fail({x});
      }
      return {};
    }
    case FrameCondition::convergent:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (R(x, y) && R(x, z) && (f.row(y) & f.row(z)) == 0) return fail({x, y, z});
      return {};
    case FrameCondition::dot3:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (R(x, y) && R(x, z) && !R(y, z) && !R(z, y)) return fail({x, y, z});
      return {};
    case FrameCondition::r1:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (R(x, y) && x != y && R(x, z) && !R(z, y)) return fail({x, y, z});
      return {};
    case FrameCondition::directed:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if ((f.row(x) & f.row(y)) == 0) return fail({x, y});
      return {};
    case FrameCondition::quasiorder: {
      ConditionResult r = frame_condition(f, FrameCondition::reflexive);
      if (!r.holds) return r;
      return frame_condition(f, FrameCondition::transitive);
    }
  }
  return {};
}

ClusterPoset cluster_poset(const Frame& f) {
  if (!is_quasiorder(f)) throw PreconditionError("cluster poset requires a quasiorder");
  const int n = f.worlds();
  ClusterPoset cp;
  cp.cluster_of.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (cp.cluster_of[static_cast<std::size_t>(x)] >= 0) continue;
    std::uint32_t members = 0;
    for (int y = 0; y < n; ++y) {
      if (f.related(x, y) && f.related(y, x)) members |= bit(y);
    }
    for (std::uint32_t m = members; m != 0; m &= m - 1) {
      cp.cluster_of[static_cast<std::size_t>(std::countr_zero(m))] = static_cast<int>(cp.clusters.size());
    }
    cp.clusters.push_back(members);
  }

  const std::size_t k = cp.clusters.size();
  cp.above.assign(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    const std::uint32_t row = f.row(std::countr_zero(cp.clusters[c]));
    for (std::size_t d = 0; d < k; ++d) {
      if ((row & cp.clusters[d]) != 0) cp.above[c] |= bit(static_cast<int>(d));
    }
  }

  // Longest chain ending at each cluster; k relaxation rounds suffice.
  cp.level.assign(k, 1);
  for (std::size_t round = 0; round < k; ++round) {
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t d = 0; d < k; ++d) {
        if (d != c && ((cp.above[d] >> c) & 1U)) cp.level[c] = std::max(cp.level[c], cp.level[d] + 1);
      }
    }
  }
  cp.depth = *std::max_element(cp.level.begin(), cp.level.end());
  return cp;
}

std::vector<std::uint32_t> extremal_rows(ExtremalKind kind, int n_worlds, std::uint32_t lower,
                                         std::uint32_t upper) {
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n_worlds), 0);
  const bool lower_universal = kind == ExtremalKind::ui || kind == ExtremalKind::uu;
  const bool upper_universal = kind == ExtremalKind::iu || kind == ExtremalKind::uu;
  for (int x = 0; x < n_worlds; ++x) {
    std::uint32_t& r = rows[static_cast<std::size_t>(x)];
    r = bit(x);
    if ((lower >> x) & 1U) r |= upper | (lower_universal ? lower : 0);
    if ((upper >> x) & 1U) r |= upper_universal ? upper : 0;
  }
  return rows;
}

std::vector<ExtremalMatch> classify_extremal(const Frame& f) {
  std::vector<ExtremalMatch> out;
  if (!is_quasiorder(f)) return out;
  const ClusterPoset cp = cluster_poset(f);
  if (cp.depth != 2) return out;
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  for (std::size_t c = 0; c < cp.clusters.size(); ++c) {
    (cp.level[c] == 1 ? lower : upper) |= cp.clusters[c];
  }
  for (const ExtremalKind kind : kExtremalKinds) {
    if (extremal_rows(kind, f.worlds(), lower, upper) == f.rows()) out.push_back({kind, lower, upper});
  }
  return out;
}

Frame make_extremal(ExtremalKind kind, int u_size, int v_size) {
  if (u_size < 1 || v_size < 1 || u_size + v_size > Frame::kMaxWorlds) {
    throw DomainError("extremal frames need nonempty levels and at most 12 worlds");
  }
  const int n = u_size + v_size;
  const std::uint32_t lower = bit(u_size) - 1;
  const std::uint32_t upper = (bit(n) - 1) & ~lower;
  return Frame(n, extremal_rows(kind, n, lower, upper));
}

Frame canonical_form(const Frame& f) {
  if (f.worlds() > kMaxCanonicalWorlds) throw SizeError("canonical form is limited to 7 worlds");
  return Frame(f.worlds(), rows_from_code(canonical_code(f.rows()), f.worlds()));
}

bool frames_isomorphic(const Frame& a, const Frame& b) {
  if (a.worlds() != b.worlds()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Frame> enumerate_frames(int n_worlds, const EnumerationOptions& options) {
  if (n_worlds < 1) throw SizeError("enumeration needs at least one world");
  if (options.max_depth && !options.quasiorder) {
    throw ParameterError("a depth bound applies only to quasiorder enumeration");
  }
  const int n = n_worlds;
  std::map<std::uint64_t, Frame> classes;
  auto keep = [&](const std::vector<std::uint32_t>& rows) {
    const std::uint64_t code = canonical_code(rows);
    if (classes.contains(code)) return;
    Frame fr(n, rows_from_code(code, n));
    if (options.max_depth && cluster_poset(fr).depth > *options.max_depth) return;
    classes.emplace(code, std::move(fr));
  };

  if (options.quasiorder) {
    if (n > 5) throw SizeError("quasiorder enumeration is limited to 5 worlds");
    // Rows are chosen in order; a new row is checked against every earlier
    // one through x R y => R(y) ⊆ R(x), which covers all pairs at the end.
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
    auto place = [&](auto&& self, int x) -> void {
      if (x == n) {
        keep(rows);
        return;
      }
      const std::uint32_t others = (bit(n) - 1) & ~bit(x);
      for (std::uint32_t extra = others;; extra = (extra - 1) & others) {
        const std::uint32_t r = bit(x) | extra;
        bool ok = true;
        for (int y = 0; y < x && ok; ++y) {
          const std::uint32_t ry = rows[static_cast<std::size_t>(y)];
          if (((r >> y) & 1U) && (ry & ~r) != 0) ok = false;
          if (((ry >> x) & 1U) && (r & ~ry) != 0) ok = false;
        }
        if (ok) {
          rows[static_cast<std::size_t>(x)] = r;
          self(self, x + 1);
        }
        if (extra == 0) break;
      }
    };
    place(place, 0);
  } else {
    if (n > 4) throw SizeError("relation enumeration is limited to 4 worlds");
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t code = 0; code < total; ++code) keep(rows_from_code(code, n));
  }

  std::vector<Frame> out;
  out.reserve(classes.size());
  for (auto& [code, fr] : classes) out.push_back(std::move(fr));
  return out;
}

}  // namespace depth2
