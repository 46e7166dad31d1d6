#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "big_count.hpp"
#include "catalan.hpp"
#include "error.hpp"
#include "partition.hpp"

namespace lonely {

/// Largest n accepted by the brute-force oracles that walk all Bell(n) set
/// partitions. Bell(12) = 4213597.
inline constexpr int kOracleCeiling = 12;

/// Largest n the counting engine accepts; the open-block stack is a 64-bit
/// mask.
inline constexpr int kMaxCountN = 63;

// ---------------------------------------------------------------------------
// All set partitions (oracle substrate).

/// Visits every set partition of [n] once, in lexicographic order of
/// restricted growth strings.
template <typename Visitor>
void for_each_set_partition(int n, Visitor&& visit) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  if (n > kOracleCeiling) detail::fail_ceiling("all_set_partitions", n, kOracleCeiling);
  if (n == 0) {
    visit(Partition{});
    return;
  }
  auto un = static_cast<std::size_t>(n);
  std::vector<int> rgs(un, 0);
  std::vector<int> max_prefix(un, 0);  // max of rgs[0..i-1], used to bound rgs[i]
  while (true) {
    visit(Partition::from_restricted_growth(rgs));
    std::size_t i = un - 1;
    while (i > 0 && rgs[i] > max_prefix[i]) --i;
    if (i == 0) return;
    ++rgs[i];
    for (std::size_t k = i + 1; k < un; ++k) {
      rgs[k] = 0;
      max_prefix[k] = std::max(max_prefix[k - 1], rgs[k - 1]);
    }
  }
}

inline std::vector<Partition> all_set_partitions(int n) {
  std::vector<Partition> out;
  for_each_set_partition(n, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

/// Noncrossing test straight from the definition: no two blocks with
/// a < c < b < d, a, b in one and c, d in the other. O(n^4); oracle only.
inline bool is_noncrossing_definitional(const Partition& p) {
  for (const auto& first : p.blocks()) {
    for (const auto& second : p.blocks()) {
      if (&first == &second) continue;
      for (std::size_t ai = 0; ai < first.size(); ++ai) {
        for (std::size_t bi = ai + 1; bi < first.size(); ++bi) {
          for (std::size_t ci = 0; ci < second.size(); ++ci) {
            for (std::size_t di = ci + 1; di < second.size(); ++di) {
              int a = first[ai], b = first[bi], c = second[ci], d = second[di];
              if (a < c && c < b && b < d) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Noncrossing generation.
//
// Positions are placed left to right. Every block that may still grow sits on
// a stack; position i either opens a new block or joins one stacked block,
// which closes every block above it. This produces each noncrossing partition
// exactly once and never visits a crossing one.

namespace detail {

template <typename Visitor>
void extend_noncrossing(int pos, int n, std::vector<Partition::Block>& blocks,
                        std::vector<std::size_t>& stack, Visitor& visit) {
  if (pos > n) {
    visit(Partition::from_blocks(n, blocks));
    return;
  }
  blocks.push_back({pos});
  stack.push_back(blocks.size() - 1);
  extend_noncrossing(pos + 1, n, blocks, stack, visit);
  stack.pop_back();
  blocks.pop_back();

  for (std::size_t t = stack.size(); t-- > 0;) {
    std::vector<std::size_t> saved(stack.begin() + static_cast<std::ptrdiff_t>(t) + 1, stack.end());
    std::size_t target = stack[t];
    stack.resize(t + 1);
    blocks[target].push_back(pos);
    extend_noncrossing(pos + 1, n, blocks, stack, visit);
    blocks[target].pop_back();
    stack.insert(stack.end(), saved.begin(), saved.end());
  }
}

}  // namespace detail

/// Visits every noncrossing partition of [n] once, in a fixed order.
template <typename Visitor>
void for_each_noncrossing_partition(int n, Visitor&& visit) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  std::vector<Partition::Block> blocks;
  std::vector<std::size_t> stack;
  detail::extend_noncrossing(1, n, blocks, stack, visit);
}

inline std::vector<Partition> noncrossing_partitions(int n) {
  std::vector<Partition> out;
  for_each_noncrossing_partition(n, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

// ---------------------------------------------------------------------------
// Counting.

struct Tally {
  int n = 0;
  BigCount lonely;
  BigCount marriageable;
  BigCount total;

  friend bool operator==(const Tally&, const Tally&) = default;
};

struct Progress {
  int n = 0;
  BigCount visited;
  BigCount total;
};

struct CountJob {
  int n = 0;
  int workers = 1;
  /// Report roughly every this many classified partitions. Reports are
  /// emitted per finished subtree, so they may be sparser than requested.
  std::optional<std::uint64_t> progress_interval;
  std::function<void(const Progress&)> on_progress;
};

namespace detail {

struct Overflow {};

inline void add_to(std::uint64_t& acc, std::uint64_t value) {
  if (!checked_add(acc, value)) throw Overflow{};
}
inline void add_to(BigCount& acc, const BigCount& value) { acc += value; }

/// Search state after placing `pos` positions: `depth` growable blocks on
/// the stack, bit t of `singles` set iff stack entry t is still a singleton.
///
/// When a position joins stack entry t, the singletons stacked above t are
/// exactly the singletons in the gap of t that this position closes, so two
/// of them make the partition marriageable. Singletons left on the stack at
/// the end are top-level.
struct SearchState {
  int pos = 0;
  int depth = 0;
  std::uint64_t singles = 0;
};

template <typename Count>
struct Split {
  Count lonely{};
  Count marriageable{};
};

/// completions[d][r]: number of ways to place r more positions with d
/// stacked blocks; prefix[d][r] = sum of completions[u][r] for u in 1..d.
/// Only cells with d + r <= n are reachable and filled.
template <typename Count>
class CompletionTable {
 public:
  explicit CompletionTable(int n)
      : n_(static_cast<std::size_t>(n)),
        completions_(n_ + 1, std::vector<Count>(n_ + 1)),
        prefix_(completions_) {
    for (std::size_t r = 0; r <= n_; ++r) {
      for (std::size_t d = 0; d + r <= n_; ++d) {
        if (r == 0) {
          completions_[d][r] = 1;
          continue;
        }
        // open a new block, or join one of the d stacked blocks
        Count c = completions_[d + 1][r - 1];
        add_to(c, prefix_[d][r - 1]);
        completions_[d][r] = c;
      }
      Count running{};
      for (std::size_t d = 1; d + r <= n_; ++d) {
        add_to(running, completions_[d][r]);
        prefix_[d][r] = running;
      }
    }
  }

  const Count& completions(int depth, int remaining) const {
    return completions_[static_cast<std::size_t>(depth)][static_cast<std::size_t>(remaining)];
  }
  const Count& prefix(int depth, int remaining) const {
    return prefix_[static_cast<std::size_t>(depth)][static_cast<std::size_t>(remaining)];
  }

 private:
  std::size_t n_;
  std::vector<std::vector<Count>> completions_;
  std::vector<std::vector<Count>> prefix_;
};

template <typename Count>
class Counter {
 public:
  explicit Counter(int n) : n_(n), table_(n) {}

  /// Counts all completions of s; s itself must not yet be marriageable.
  Split<Count> count(const SearchState& s) const {
    Split<Count> out;
    descend(s.pos, s.depth, s.singles, out);
    return out;
  }

  /// Children of s. Children that are already marriageable are not
  /// returned; their completions are added to `married` instead.
  std::vector<SearchState> expand(const SearchState& s, Count& married) const {
    std::vector<SearchState> children;
    int remaining = n_ - s.pos - 1;
    children.push_back({s.pos + 1, s.depth + 1, s.singles | (std::uint64_t{1} << s.depth)});
    for (int t = s.depth - 1; t >= 0; --t) {
      if (std::popcount(s.singles >> (t + 1)) >= 2) {
        add_to(married, table_.prefix(t + 1, remaining));
        break;
      }
      children.push_back({s.pos + 1, t + 1, s.singles & ((std::uint64_t{1} << t) - 1)});
    }
    return children;
  }

  /// Final classification of a complete state.
  static bool leaf_marriageable(const SearchState& s) { return std::popcount(s.singles) >= 2; }

  int n() const { return n_; }

 private:
  void descend(int pos, int depth, std::uint64_t singles, Split<Count>& out) const {
    if (pos == n_) {
      add_to(std::popcount(singles) >= 2 ? out.marriageable : out.lonely, Count{1});
      return;
    }
    int remaining = n_ - pos - 1;
    descend(pos + 1, depth + 1, singles | (std::uint64_t{1} << depth), out);
    for (int t = depth - 1; t >= 0; --t) {
      if (std::popcount(singles >> (t + 1)) >= 2) {
        // Joining t or any entry below closes a gap holding two singletons.
        add_to(out.marriageable, table_.prefix(t + 1, remaining));
        return;
      }
      descend(pos + 1, t + 1, singles & ((std::uint64_t{1} << t) - 1), out);
    }
  }

  int n_;
  CompletionTable<Count> table_;
};

template <typename Count>
Tally run_count(const CountJob& job) {
  Counter<Count> counter(job.n);
  Count married{};
  std::vector<SearchState> frontier{SearchState{}};
  std::size_t wanted = 4 * static_cast<std::size_t>(job.workers);
  while (frontier.size() < wanted && !frontier.empty() && frontier.front().pos < job.n) {
    std::vector<SearchState> next;
    for (const auto& s : frontier) {
      auto children = counter.expand(s, married);
      next.insert(next.end(), children.begin(), children.end());
    }
    frontier = std::move(next);
  }

  std::vector<Split<Count>> results(frontier.size());
  BigCount expected_total = catalan(job.n);
  std::atomic<std::size_t> cursor{0};
  std::mutex progress_mutex;
  BigCount visited = BigCount(married);
  BigCount next_report = job.progress_interval.value_or(0);
  std::exception_ptr failure;

  auto work = [&] {
    try {
      for (std::size_t i; (i = cursor++) < frontier.size();) {
        results[i] = counter.count(frontier[i]);
        if (job.progress_interval && job.on_progress) {
          std::lock_guard lock(progress_mutex);
          visited += BigCount(results[i].lonely) + BigCount(results[i].marriageable);
          if (visited >= next_report) {
            job.on_progress(Progress{job.n, visited, expected_total});
            while (next_report <= visited) next_report += *job.progress_interval;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(progress_mutex);
      if (!failure) failure = std::current_exception();
      cursor = frontier.size();
    }
  };

  if (job.workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < job.workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  Split<Count> sum;
  sum.marriageable = married;
  for (const auto& r : results) {
    add_to(sum.lonely, r.lonely);
    add_to(sum.marriageable, r.marriageable);
  }
  Tally t;
  t.n = job.n;
  t.lonely = BigCount(sum.lonely);
  t.marriageable = BigCount(sum.marriageable);
  t.total = t.lonely + t.marriageable;
  return t;
}

}  // namespace detail

/// Counts lonely and marriageable noncrossing partitions of [job.n]. The
/// result does not depend on the worker count. The total is checked against
/// the Catalan number before returning.
inline Tally tally(const CountJob& job) {
  if (job.n < 0) throw InvalidArgument("n must be nonnegative");
  if (job.n > kMaxCountN) detail::fail_ceiling("tally", job.n, kMaxCountN);
  if (job.workers < 1) throw InvalidArgument("workers must be >= 1");
  Tally result;
  try {
    result = detail::run_count<std::uint64_t>(job);
  } catch (const detail::Overflow&) {
    result = detail::run_count<BigCount>(job);
  }
  if (result.total != catalan(job.n)) {
    throw InternalError("tally total " + to_decimal(result.total) + " != Catalan(" +
                        std::to_string(job.n) + ")");
  }
  return result;
}

inline Tally tally(int n, int workers = 1) { return tally(CountJob{n, workers, {}, {}}); }

inline std::vector<Tally> tally_range(int max_n, int workers = 1) {
  if (max_n < 0) throw InvalidArgument("max_n must be nonnegative");
  std::vector<Tally> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) out.push_back(tally(n, workers));
  return out;
}

/// Brute force: every set partition, filtered by the definitional crossing
/// test and classified by merge-and-recheck.
inline Tally oracle_tally(int n) {
  if (n > kOracleCeiling) detail::fail_ceiling("oracle_tally", n, kOracleCeiling);
  Tally t;
  t.n = n;
  for_each_set_partition(n, [&](const Partition& p) {
    if (!is_noncrossing_definitional(p)) return;
    (classify(p).marriageable() ? t.marriageable : t.lonely) += 1;
  });
  t.total = t.lonely + t.marriageable;
  return t;
}

}  // namespace lonely
