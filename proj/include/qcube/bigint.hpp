#pragma once
// Exact integer arithmetic helpers.  All counting paths use BigCount;
// floating point never touches a count.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcube {

using BigCount = boost::multiprecision::cpp_int;

inline BigCount pow2(uint64_t e) {
  BigCount r = 1;
  return r << e;
}

inline BigCount binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is always an integer after this division
  }
  return r;
}

inline BigCount factorial(uint64_t n) {
  BigCount r = 1;
  for (uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::string to_decimal(const BigCount& v) { return v.str(); }

// log2 via exact top-62-bit mantissa extraction; v > 0.
long double log2_big(const BigCount& v);

}  // namespace qcube
