// Classical q-analogues as univariate polynomials in "q".
//
// Everything is exact; quotient families (q-Catalan, q-Narayana, q-Kirkman)
// are computed by exact polynomial division, so non-divisibility is a loud
// failure instead of a silent approximation.
#pragma once

#include <vector>

#include "sievekit/polyring.hpp"

namespace sievekit {

// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
MultiPoly q_int(unsigned n);

// [n]!_q, memoized.
MultiPoly q_factorial(unsigned n);

// Gaussian binomial; zero when k > n.
MultiPoly q_binomial(unsigned n, unsigned k);

// [n; parts]_q with sum(parts) == n required.
MultiPoly q_multinomial(unsigned n, const std::vector<unsigned>& parts);

// MacMahon's q-Catalan C_n(q) = (1/[n+1]_q) [2n over n]_q.
MultiPoly q_catalan(unsigned n);

// q-Narayana N(n,k;q) = (1/[n]_q) [n over k]_q [n over k+1]_q q^(k(k+1)),
// requires n >= 1 and 0 <= k <= n-1.
MultiPoly q_narayana(unsigned n, unsigned k);

// q-Kirkman (1/[n+k]_q) [n+k over k+1]_q [n-3 over k]_q,
// requires n >= 3 and 0 <= k <= n-3.
MultiPoly q_kirkman(unsigned n, unsigned k);

// Carlitz-Riordan q-Catalan: C~_0 = 1,
// C~_{n+1}(q) = sum_k q^k C~_k(q) C~_{n-k}(q).  Memoized.
MultiPoly carlitz_riordan(unsigned n);

}  // namespace sievekit
