#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lonely {

/// Exact nonnegative counts. Every count the library reports is a BigCount;
/// machine words are used only inside hot loops with overflow detection.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

inline BigCount parse_decimal(const std::string& text) { return BigCount(text); }

/// Exact binomial coefficient with the zero convention: 0 unless 0 <= k <= n.
inline BigCount binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

namespace detail {

/// Add with overflow detection; returns false on wraparound.
inline bool checked_add(std::uint64_t& acc, std::uint64_t value) {
  return !__builtin_add_overflow(acc, value, &acc);
}

}  // namespace detail
}  // namespace lonely
