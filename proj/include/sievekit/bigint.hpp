// Arbitrary-precision integer type used for every coefficient in the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sievekit {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline BigInt big_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt big_catalan(unsigned n) {
  return big_binomial(2 * n, n) / (n + 1);
}

}  // namespace sievekit
