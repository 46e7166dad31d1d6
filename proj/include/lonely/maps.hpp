#pragma once

// Injections between lonely/marriageable families of consecutive sizes.
// f: L(n) -> L(n+1), g: M(n) -> M(n+1), h: NC(n) -> M(n+2) and
// i, j, k: M(n) -> M(n+2). Each map checks its domain and throws
// InvalidArgument on a partition outside it.

#include <string>
#include <vector>

#include "partition.hpp"

namespace lonely {

namespace detail {

inline void require_kind(const Partition& p, Kind kind, const char* map) {
  if (classify_fast(p).kind != kind) {
    throw InvalidArgument(std::string(map) + " requires a " + to_string(kind) +
                          " singles partition, got " + to_string(p));
  }
}

inline std::vector<Partition::Block> blocks_copy(const Partition& p) { return p.blocks(); }

}  // namespace detail

/// Adds n+1 to the block containing 1. On [0] there is no such block, so the
/// image is {{1}}.
inline Partition map_f(const Partition& p) {
  detail::require_kind(p, Kind::Lonely, "map_f");
  int n = p.size();
  if (n == 0) return Partition::from_blocks(1, {{1}});
  auto blocks = detail::blocks_copy(p);
  blocks[p.block_of(1)].push_back(n + 1);
  return Partition::from_blocks(n + 1, std::move(blocks));
}

/// Appends the singleton {n+1}.
inline Partition map_g(const Partition& p) {
  detail::require_kind(p, Kind::Marriageable, "map_g");
  auto blocks = detail::blocks_copy(p);
  blocks.push_back({p.size() + 1});
  return Partition::from_blocks(p.size() + 1, std::move(blocks));
}

/// Appends the singletons {n+1} and {n+2}.
inline Partition map_h(const Partition& p) {
  if (!is_noncrossing(p)) throw InvalidArgument("map_h requires a noncrossing partition");
  int n = p.size();
  auto blocks = detail::blocks_copy(p);
  blocks.push_back({n + 1});
  blocks.push_back({n + 2});
  return Partition::from_blocks(n + 2, std::move(blocks));
}

/// Appends the pair {n+1, n+2}.
inline Partition map_i(const Partition& p) {
  detail::require_kind(p, Kind::Marriageable, "map_i");
  int n = p.size();
  auto blocks = detail::blocks_copy(p);
  blocks.push_back({n + 1, n + 2});
  return Partition::from_blocks(n + 2, std::move(blocks));
}

/// Adds n+2 to the block containing 1 and appends {n+1}.
inline Partition map_j(const Partition& p) {
  detail::require_kind(p, Kind::Marriageable, "map_j");
  int n = p.size();
  auto blocks = detail::blocks_copy(p);
  blocks[p.block_of(1)].push_back(n + 2);
  blocks.push_back({n + 1});
  return Partition::from_blocks(n + 2, std::move(blocks));
}

/// Adds n+1 to the block containing n and appends {n+2}.
inline Partition map_k(const Partition& p) {
  detail::require_kind(p, Kind::Marriageable, "map_k");
  int n = p.size();
  auto blocks = detail::blocks_copy(p);
  blocks[p.block_of(n)].push_back(n + 1);
  blocks.push_back({n + 2});
  return Partition::from_blocks(n + 2, std::move(blocks));
}

}  // namespace lonely
