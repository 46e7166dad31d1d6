#pragma once

// Standard road intersections of size n: entries E1..En and exits X1..Xn
// alternate clockwise on a circle, E_i at position 2i-1 and X_j at 2j. A lane
// E_iX_j is a chord; two lanes conflict when they share an endpoint or their
// chords cross. A maximal set of lanes (MSL) is a conflict-free lane set that
// admits no further lane.

#include <algorithm>
#include <charconv>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "partition.hpp"

namespace lonely {

/// Largest size accepted by the exhaustive MSL search.
inline constexpr int kMslCeiling = 7;

struct Lane {
  int entry = 1;
  int exit = 1;

  bool is_u_turn() const { return entry == exit; }
  friend auto operator<=>(const Lane&, const Lane&) = default;
};

namespace detail {

inline void check_lane(const Lane& lane, int n) {
  if (n < 1) throw InvalidArgument("intersection size must be >= 1");
  if (lane.entry < 1 || lane.entry > n || lane.exit < 1 || lane.exit > n) {
    throw InvalidArgument("lane E" + std::to_string(lane.entry) + "X" + std::to_string(lane.exit) +
                          " outside size " + std::to_string(n));
  }
}

inline std::pair<int, int> chord(const Lane& lane) {
  int a = 2 * lane.entry - 1;
  int b = 2 * lane.exit;
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

inline bool conflict(const Lane& a, const Lane& b) {
  if (a.entry == b.entry || a.exit == b.exit) return true;
  auto [p1, p2] = chord(a);
  auto [q1, q2] = chord(b);
  return (p1 < q1 && q1 < p2 && p2 < q2) || (q1 < p1 && p1 < q2 && q2 < p2);
}

inline bool pairwise_compatible(std::span<const Lane> lanes) {
  for (std::size_t a = 0; a < lanes.size(); ++a) {
    for (std::size_t b = a + 1; b < lanes.size(); ++b) {
      if (conflict(lanes[a], lanes[b])) return false;
    }
  }
  return true;
}

inline bool admits_no_lane(std::span<const Lane> lanes, int n) {
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Lane extra{i, j};
      if (std::find(lanes.begin(), lanes.end(), extra) != lanes.end()) continue;
      bool blocked = std::any_of(lanes.begin(), lanes.end(),
                                 [&](const Lane& l) { return conflict(extra, l); });
      if (!blocked) return false;
    }
  }
  return true;
}

}  // namespace detail

/// True iff the lanes share an endpoint or their chords interleave.
inline bool lanes_cross(const Lane& a, const Lane& b, int n) {
  detail::check_lane(a, n);
  detail::check_lane(b, n);
  return detail::conflict(a, b);
}

/// True iff the lanes are pairwise conflict-free and no lane of the size-n
/// intersection can be added without a conflict.
inline bool is_msl(std::span<const Lane> lanes, int n) {
  for (const auto& lane : lanes) detail::check_lane(lane, n);
  return detail::pairwise_compatible(lanes) && detail::admits_no_lane(lanes, n);
}

/// A maximal set of lanes. Lanes are kept sorted by entry; every entry and
/// every exit is used exactly once.
class Msl {
 public:
  static Msl from_lanes(int n, std::vector<Lane> lanes) {
    if (!is_msl(lanes, n)) throw InvalidArgument("lane set is not a maximal set of lanes");
    if (lanes.size() != static_cast<std::size_t>(n)) {
      throw InvalidArgument("maximal set of lanes must have exactly n lanes");
    }
    return Msl(n, std::move(lanes));
  }

  int size() const { return n_; }
  const std::vector<Lane>& lanes() const { return lanes_; }
  int exit_of(int entry) const { return lanes_.at(static_cast<std::size_t>(entry - 1)).exit; }

  std::vector<int> u_turns() const {
    std::vector<int> out;
    for (const auto& l : lanes_) {
      if (l.is_u_turn()) out.push_back(l.entry);
    }
    return out;
  }

  friend bool operator==(const Msl&, const Msl&) = default;
  friend auto operator<=>(const Msl& a, const Msl& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.lanes_ <=> b.lanes_;
  }

 private:
  friend Msl partition_to_msl(const Partition& p);

  Msl(int n, std::vector<Lane> lanes) : n_(n), lanes_(std::move(lanes)) {
    std::sort(lanes_.begin(), lanes_.end());
  }

  int n_ = 0;
  std::vector<Lane> lanes_;
};

// ---------------------------------------------------------------------------
// Text form: "E1>X2,E2>X1,E3>X3", sorted by entry.

inline std::string to_string(std::span<const Lane> lanes) {
  std::vector<Lane> sorted(lanes.begin(), lanes.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ',';
    out += 'E' + std::to_string(sorted[i].entry) + ">X" + std::to_string(sorted[i].exit);
  }
  return out;
}

inline std::string to_string(const Msl& m) { return to_string(std::span<const Lane>(m.lanes())); }

inline std::vector<Lane> parse_lanes(std::string_view text) {
  std::vector<Lane> lanes;
  if (text.empty()) return lanes;
  auto number = [&](std::string_view token, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidArgument("malformed lane '" + std::string(whole) + "'");
    }
    return value;
  };
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view token = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    auto gt = token.find(">X");
    if (token.size() < 5 || token.front() != 'E' || gt == std::string_view::npos) {
      throw InvalidArgument("malformed lane '" + std::string(token) + "'");
    }
    lanes.push_back({number(token.substr(1, gt - 1), token), number(token.substr(gt + 2), token)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lanes;
}

// ---------------------------------------------------------------------------
// Bijection with noncrossing partitions.

/// Block a1 < ... < ak becomes the lanes E_{a1}X_{ak} and E_{a(t+1)}X_{a(t)};
/// a singleton becomes a U-turn.
inline Msl partition_to_msl(const Partition& p) {
  if (p.size() < 1) throw InvalidArgument("partition_to_msl requires n >= 1");
  if (!is_noncrossing(p)) throw InvalidArgument("partition_to_msl requires a noncrossing partition");
  std::vector<Lane> lanes;
  lanes.reserve(static_cast<std::size_t>(p.size()));
  for (const auto& block : p.blocks()) {
    lanes.push_back({block.front(), block.back()});
    for (std::size_t t = 1; t < block.size(); ++t) lanes.push_back({block[t], block[t - 1]});
  }
  return Msl(p.size(), std::move(lanes));
}

/// Inverse of partition_to_msl: blocks are the cycles of entry -> exit.
inline Partition msl_to_partition(const Msl& m) {
  int n = m.size();
  std::vector<bool> placed(static_cast<std::size_t>(n) + 1, false);
  std::vector<Partition::Block> blocks;
  for (int start = 1; start <= n; ++start) {
    if (placed[static_cast<std::size_t>(start)]) continue;
    Partition::Block block;
    for (int e = start; !placed[static_cast<std::size_t>(e)]; e = m.exit_of(e)) {
      placed[static_cast<std::size_t>(e)] = true;
      block.push_back(e);
    }
    blocks.push_back(std::move(block));
  }
  return Partition::from_blocks(n, std::move(blocks));
}

/// True iff no two U-turns E_iX_i, E_jX_j can be replaced by E_iX_j, E_jX_i
/// to give another MSL.
inline bool is_absolute(const Msl& m) {
  auto turns = m.u_turns();
  for (std::size_t a = 0; a < turns.size(); ++a) {
    for (std::size_t b = a + 1; b < turns.size(); ++b) {
      std::vector<Lane> swapped = m.lanes();
      int i = turns[a];
      int j = turns[b];
      for (auto& lane : swapped) {
        if (lane.entry == i) lane.exit = j;
        else if (lane.entry == j) lane.exit = i;
      }
      if (is_msl(swapped, m.size())) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exhaustive MSL search, independent of the bijection.

namespace detail {

template <typename Visitor>
void search_lanes(std::size_t next, const std::vector<Lane>& candidates, std::vector<Lane>& chosen,
                  int n, Visitor& visit) {
  if (next == candidates.size()) {
    if (admits_no_lane(chosen, n)) visit(Msl::from_lanes(n, chosen));
    return;
  }
  const Lane& lane = candidates[next];
  bool fits = std::none_of(chosen.begin(), chosen.end(),
                           [&](const Lane& l) { return conflict(l, lane); });
  if (fits) {
    chosen.push_back(lane);
    search_lanes(next + 1, candidates, chosen, n, visit);
    chosen.pop_back();
  }
  search_lanes(next + 1, candidates, chosen, n, visit);
}

}  // namespace detail

/// Visits every MSL of the size-n intersection by searching all
/// conflict-free lane subsets.
template <typename Visitor>
void for_each_msl(int n, Visitor&& visit) {
  if (n < 1) throw InvalidArgument("intersection size must be >= 1");
  if (n > kMslCeiling) detail::fail_ceiling("enumerate_msl", n, kMslCeiling);
  std::vector<Lane> candidates;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) candidates.push_back({i, j});
  }
  std::vector<Lane> chosen;
  detail::search_lanes(0, candidates, chosen, n, visit);
}

inline std::vector<Msl> enumerate_msl(int n) {
  std::vector<Msl> out;
  for_each_msl(n, [&](Msl m) { out.push_back(std::move(m)); });
  return out;
}

}  // namespace lonely
