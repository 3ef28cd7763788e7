// Generalized Fibonacci polynomials {m} in Z[s,t] ({0}=0, {1}=1,
// {m+2} = s{m+1} + t{m}), Fibonomial coefficients, their Catalan and
// Narayana quotients, and the hook-content product with its semistandard
// tableau oracle.
#pragma once

#include <vector>

#include "sievekit/polyring.hpp"

namespace sievekit {

// {m} as a polynomial in (s, t).
MultiPoly fib_poly(unsigned m);

// {m}! = {m}{m-1}...{1}; {0}! = 1.
MultiPoly fib_factorial(unsigned m);

// Fibonomial {n over k} = {n}! / ({k}! {n-k}!); zero when k > n.
MultiPoly fibonomial(unsigned n, unsigned k);

// (s,t)-Catalan (1/{n+1}) {2n over n}.
MultiPoly st_catalan(unsigned n);

// (s,t)-Narayana (1/{n}) {n over k} {n over k+1}, n >= 1, 0 <= k <= n-1.
MultiPoly st_narayana(unsigned n, unsigned k);

// True iff the three quotient forms of the (s,t)-Narayana number agree as
// polynomials:
//   (1/{n}) {n,k} {n,k+1} = (1/{n-k}) {n,k+1} {n-1,k} = (1/{k+1}) {n,k} {n-1,k}.
bool narayana_identity_check(unsigned n, unsigned k);

// True iff {n over k} at (s,t) = (a+b, -ab) equals the homogenization
// b^(k(n-k)) [n over k]_{q=a/b} of the Gaussian binomial.  Requires n <= 10.
bool xy_specialization_check(unsigned n, unsigned k);

// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const;       // |lambda|
  unsigned num_parts() const { return static_cast<unsigned>(parts_.size()); }
  Partition conjugate() const;

  // b(lambda) = sum (i-1) * lambda_i.
  unsigned b_statistic() const;

  // Cell statistics in row-major order: content j - i and hook length
  // (0-based row i, column j).
  std::vector<int> contents() const;
  std::vector<unsigned> hook_lengths() const;

 private:
  std::vector<unsigned> parts_;
};

// (-t)^b(lambda) * prod_cells {n + content} / prod_cells {hook}, the
// (s,t) hook-content specialization of the Schur polynomial at the geometric
// point (a^(n-1), a^(n-2) b, ..., b^(n-1)) with s = a+b, t = -ab.
// Requires lambda to have at most n parts.
MultiPoly hook_content_product(const Partition& lambda, unsigned n);

// Direct Schur polynomial at the geometric point: sum over semistandard
// tableaux of shape lambda with entries in 1..n, where entry i weighs
// a^(n-i) b^(i-1).  Result in variables (a, b).
// Requires |lambda| <= 6 and n <= 7.
MultiPoly schur_geometric_oracle(const Partition& lambda, unsigned n);

}  // namespace sievekit
