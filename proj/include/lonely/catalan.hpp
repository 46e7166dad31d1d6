#pragma once

#include "big_count.hpp"
#include "error.hpp"

namespace lonely {

/// C_n = binomial(2n, n) / (n + 1), exactly.
inline BigCount catalan(int n) {
  if (n < 0) throw InvalidArgument("catalan requires n >= 0");
  BigCount central = binomial(2LL * n, n);
  BigCount quotient;
  BigCount remainder;
  boost::multiprecision::divide_qr(central, BigCount(n + 1), quotient, remainder);
  if (remainder != 0) throw InternalError("binomial(2n,n) not divisible by n+1");
  return quotient;
}

}  // namespace lonely
