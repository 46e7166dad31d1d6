#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace lonely {

/// A set partition of [n] = {1, ..., n} in canonical block form.
///
/// Blocks are sorted by their minimum element and elements within a block
/// ascend, so two partitions are equal iff their canonical forms are equal.
/// Elements are 1-based. The default-constructed value is the empty
/// partition of [0].
class Partition {
 public:
  using Block = std::vector<int>;

  Partition() = default;

  /// Validates and canonicalizes. Blocks and their elements may come in any
  /// order; they must be nonempty, pairwise disjoint, and cover [n] exactly.
  static Partition from_blocks(int n, std::vector<Block> blocks) {
    if (n < 0) throw InvalidArgument("partition size must be nonnegative");
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (auto& block : blocks) {
      if (block.empty()) throw InvalidArgument("partition has an empty block");
      std::sort(block.begin(), block.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (int e : blocks[b]) {
        if (e < 1 || e > n) {
          throw InvalidArgument("element " + std::to_string(e) + " outside [1," +
                                std::to_string(n) + "]");
        }
        auto& slot = owner[static_cast<std::size_t>(e - 1)];
        if (slot != -1) throw InvalidArgument("duplicate element " + std::to_string(e));
        slot = static_cast<int>(b);
      }
    }
    for (int e = 1; e <= n; ++e) {
      if (owner[static_cast<std::size_t>(e - 1)] == -1) {
        throw InvalidArgument("element " + std::to_string(e) + " missing");
      }
    }
    Partition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    p.owner_ = std::move(owner);
    return p;
  }

  /// Builds from a restricted growth string: rgs[e-1] is the 0-based block
  /// label of element e, with labels introduced in increasing order.
  static Partition from_restricted_growth(const std::vector<int>& rgs) {
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      auto label = static_cast<std::size_t>(rgs[i]);
      if (label > blocks.size()) throw InvalidArgument("not a restricted growth string");
      if (label == blocks.size()) blocks.emplace_back();
      blocks[label].push_back(static_cast<int>(i + 1));
    }
    return from_blocks(static_cast<int>(rgs.size()), std::move(blocks));
  }

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  const Block& block(std::size_t index) const { return blocks_.at(index); }

  /// Index of the block containing element e.
  std::size_t block_of(int e) const {
    check_element(e);
    return static_cast<std::size_t>(owner_[static_cast<std::size_t>(e - 1)]);
  }

  bool is_singleton(int e) const { return blocks_[block_of(e)].size() == 1; }

  /// Singleton positions in ascending order.
  std::vector<int> singletons() const {
    std::vector<int> out;
    for (const auto& b : blocks_) {
      if (b.size() == 1) out.push_back(b.front());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t singleton_count() const {
    return static_cast<std::size_t>(
        std::count_if(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size() == 1; }));
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.owner_ <=> b.owner_;
  }

 private:
  void check_element(int e) const {
    if (e < 1 || e > n_) {
      throw InvalidArgument("element " + std::to_string(e) + " outside [1," + std::to_string(n_) +
                            "]");
    }
  }

  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> owner_;
};

// ---------------------------------------------------------------------------
// Text form: blocks separated by '/', elements by ','. "1,2/3/4" is
// {{1,2},{3},{4}}; the empty string is the partition of [0].

inline std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    if (b) out += '/';
    const auto& block = p.block(b);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '{' << to_string(p) << '}';
}

/// Parses the text form. The ground set size is the largest element unless
/// `n` is given, in which case every element must lie in [1, n] and all of
/// [n] must be covered.
inline Partition parse_partition(std::string_view text, std::optional<int> n = std::nullopt) {
  std::vector<Partition::Block> blocks;
  int largest = 0;
  if (!text.empty()) {
    blocks.emplace_back();
    std::size_t pos = 0;
    while (true) {
      std::size_t end = text.find_first_of(",/", pos);
      std::string_view token = text.substr(pos, end == std::string_view::npos ? end : end - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw InvalidArgument("malformed partition text '" + std::string(text) + "'");
      }
      if (value < 1) throw InvalidArgument("element " + std::to_string(value) + " out of range");
      largest = std::max(largest, value);
      blocks.back().push_back(value);
      if (end == std::string_view::npos) break;
      if (text[end] == '/') blocks.emplace_back();
      pos = end + 1;
    }
  }
  int size = n.value_or(largest);
  if (largest > size) {
    throw InvalidArgument("element " + std::to_string(largest) + " out of range for n=" +
                          std::to_string(size));
  }
  return Partition::from_blocks(size, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Crossing structure.

/// Linear scan with a stack of open blocks: when an element continues a
/// block, that block must be the most recently opened one still open.
inline bool is_noncrossing(const Partition& p) {
  std::vector<std::size_t> open;
  std::vector<std::size_t> seen(p.block_count(), 0);
  for (int e = 1; e <= p.size(); ++e) {
    std::size_t b = p.block_of(e);
    std::size_t size = p.block(b).size();
    if (seen[b]++ == 0) {
      if (size > 1) open.push_back(b);
      continue;
    }
    if (open.empty() || open.back() != b) return false;
    if (seen[b] == size) open.pop_back();
  }
  return true;
}

/// Identifies where a position sits in a noncrossing partition: inside the
/// gap between two consecutive elements of its innermost enclosing block, or
/// at top level. Gap g of a block lies between its g-th and (g+1)-th element
/// (0-based).
struct Region {
  std::optional<std::size_t> block;  // nullopt = top level
  std::size_t gap = 0;

  bool is_root() const { return !block.has_value(); }
  friend auto operator<=>(const Region&, const Region&) = default;
};

/// Enclosure structure of a noncrossing partition.
class NestingForest {
 public:
  explicit NestingForest(const Partition& p)
      : parent_(p.block_count()), singleton_region_(static_cast<std::size_t>(p.size())) {
    std::vector<std::size_t> open;
    std::vector<std::size_t> seen(p.block_count(), 0);
    for (int e = 1; e <= p.size(); ++e) {
      std::size_t b = p.block_of(e);
      std::size_t size = p.block(b).size();
      if (seen[b]++ == 0) {
        Region here;
        if (!open.empty()) here = Region{open.back(), seen[open.back()] - 1};
        parent_[b] = here.block;
        if (size == 1) {
          singleton_region_[static_cast<std::size_t>(e - 1)] = here;
          regions_[here].push_back(e);
        } else {
          open.push_back(b);
        }
        continue;
      }
      if (open.empty() || open.back() != b) {
        throw InvalidArgument("nesting forest requires a noncrossing partition");
      }
      if (seen[b] == size) open.pop_back();
    }
  }

  /// Innermost enclosing block, or nullopt for a top-level block.
  std::optional<std::size_t> parent(std::size_t block) const { return parent_.at(block); }

  /// Region of a singleton position. Undefined for non-singletons.
  const Region& region_of(int singleton) const {
    return singleton_region_.at(static_cast<std::size_t>(singleton - 1));
  }

  /// Singletons grouped by region, each list ascending.
  const std::map<Region, std::vector<int>>& region_singletons() const { return regions_; }

 private:
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<Region> singleton_region_;
  std::map<Region, std::vector<int>> regions_;
};

// ---------------------------------------------------------------------------
// Singleton merging and classification.

namespace detail {

inline void require_singleton_pair(const Partition& p, int i, int j) {
  if (i >= j) throw InvalidArgument("singleton pair must satisfy i < j");
  if (i < 1 || j > p.size()) throw InvalidArgument("singleton pair out of range");
  if (!p.is_singleton(i) || !p.is_singleton(j)) {
    throw InvalidArgument("{" + std::to_string(i) + "} and {" + std::to_string(j) +
                          "} must both be singleton blocks");
  }
}

}  // namespace detail

/// Replaces {i} and {j} by {i, j}. The result may be crossing.
inline Partition merge_singletons(const Partition& p, int i, int j) {
  detail::require_singleton_pair(p, i, j);
  std::vector<Partition::Block> blocks;
  blocks.reserve(p.block_count() - 1);
  for (const auto& b : p.blocks()) {
    if (b.size() == 1 && (b.front() == i || b.front() == j)) continue;
    blocks.push_back(b);
  }
  blocks.push_back({i, j});
  return Partition::from_blocks(p.size(), std::move(blocks));
}

/// True iff merging {i} and {j} keeps p noncrossing: no other block may have
/// one element strictly between i and j and another outside [i, j].
inline bool can_merge(const Partition& p, int i, int j) {
  detail::require_singleton_pair(p, i, j);
  for (const auto& b : p.blocks()) {
    bool inside = false;
    bool outside = false;
    for (int e : b) {
      (e > i && e < j ? inside : outside) = true;
    }
    if (inside && outside) return false;
  }
  return true;
}

enum class Kind { Lonely, Marriageable };

inline const char* to_string(Kind kind) {
  return kind == Kind::Lonely ? "lonely" : "marriageable";
}

struct Classification {
  Kind kind = Kind::Lonely;
  std::optional<std::pair<int, int>> witness;  // set iff Marriageable

  bool marriageable() const { return kind == Kind::Marriageable; }
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Definitional classification: tries every singleton pair in lexicographic
/// order, merging and rechecking for crossings.
inline Classification classify(const Partition& p) {
  if (!is_noncrossing(p)) throw InvalidArgument("classify requires a noncrossing partition");
  auto singles = p.singletons();
  for (std::size_t a = 0; a < singles.size(); ++a) {
    for (std::size_t b = a + 1; b < singles.size(); ++b) {
      if (is_noncrossing(merge_singletons(p, singles[a], singles[b]))) {
        return {Kind::Marriageable, std::pair{singles[a], singles[b]}};
      }
    }
  }
  return {};
}

/// Region-based classification: p is marriageable iff some region holds two
/// singletons. Returns the same lexicographically smallest witness as
/// classify().
inline Classification classify_fast(const Partition& p) {
  NestingForest forest(p);
  std::optional<std::pair<int, int>> best;
  for (const auto& [region, singles] : forest.region_singletons()) {
    if (singles.size() < 2) continue;
    std::pair candidate{singles[0], singles[1]};
    if (!best || candidate < *best) best = candidate;
  }
  if (!best) return {};
  return {Kind::Marriageable, best};
}

}  // namespace lonely
