#pragma once

#include <string>
#include <vector>

#include "big_count.hpp"
#include "catalan.hpp"
#include "enumeration.hpp"
#include "error.hpp"

namespace lonely {

namespace detail {

inline BigCount exact_div(const BigCount& numerator, long long denominator, const char* what) {
  BigCount q;
  BigCount r;
  boost::multiprecision::divide_qr(numerator, BigCount(denominator), q, r);
  if (r != 0) throw InternalError(std::string(what) + ": inexact division");
  return q;
}

}  // namespace detail

/// Noncrossing partitions of [n] with m blocks, k of them singletons, for
/// k in {0, 1}, by Poupard's closed forms.
///
///   k = 0:  binomial(n, m) * binomial(n-m-1, m-1) / (n-m+1), NC(0,0,0) = 1
///   k = 1:  binomial(n, m-1) * binomial(n-m-1, m-2),          NC(1,1,1) = 1
///
/// binomial(a, b) is 0 outside 0 <= b <= a.
inline BigCount nc_count(int n, int m, int k) {
  if (n < 0 || m < 0) throw InvalidArgument("nc_count requires n, m >= 0");
  if (k == 0) {
    if (n == 0 && m == 0) return 1;
    BigCount product = binomial(n, m) * binomial(n - m - 1, m - 1);
    if (product == 0) return 0;
    return detail::exact_div(product, n - m + 1, "nc_count(k=0)");
  }
  if (k == 1) {
    if (n == 1 && m == 1) return 1;
    return binomial(n, m - 1) * binomial(n - m - 1, m - 2);
  }
  throw InvalidArgument("nc_count closed form only exists for k in {0, 1}, got k=" +
                        std::to_string(k));
}

/// NC(n, m, k) by enumeration, for any k.
inline BigCount nc_count_enumerated(int n, int m, int k) {
  if (n > kOracleCeiling) detail::fail_ceiling("nc_count_enumerated", n, kOracleCeiling);
  if (n < 0 || m < 0 || k < 0) throw InvalidArgument("nc_count_enumerated requires n, m, k >= 0");
  BigCount count = 0;
  for_each_noncrossing_partition(n, [&](const Partition& p) {
    if (p.block_count() == static_cast<std::size_t>(m) &&
        p.singleton_count() == static_cast<std::size_t>(k)) {
      count += 1;
    }
  });
  return count;
}

/// Lower bound on L(n): partitions with at most one singleton are lonely.
inline BigCount lower_bound_lonely(int n) {
  if (n < 2) throw InvalidArgument("lower_bound_lonely requires n >= 2");
  BigCount sum = 0;
  for (int m = 1; m <= n / 2; ++m) sum += nc_count(n, m, 0);
  for (int m = 2; m <= (n + 1) / 2; ++m) sum += nc_count(n, m, 1);
  return sum;
}

/// Lower bound on M(n): marriageable partitions with exactly two singletons
/// {i} < {j}, which split into singleton-free noncrossing partitions of the
/// j-i-1 positions inside and the n+i-j-1 positions outside.
inline BigCount lower_bound_marriageable(int n) {
  if (n < 3) throw InvalidArgument("lower_bound_marriageable requires n >= 3");
  auto singleton_free = [](int len) {
    BigCount sum = 0;
    for (int m = 0; m <= len / 2; ++m) sum += nc_count(len, m, 0);
    return sum;
  };
  // The summand depends only on the distance d = j - i; n - d pairs share it.
  BigCount total = 0;
  for (int d = 1; d <= n - 1; ++d) {
    total += BigCount(n - d) * singleton_free(n - d - 1) * singleton_free(d - 1);
  }
  return total;
}

}  // namespace lonely
