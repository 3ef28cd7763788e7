// Exact sparse multivariate polynomials over arbitrary-precision integers.
//
// A MultiPoly carries an ordered list of variable names (at most 4) and a
// sparse term map keyed by exponent vectors.  Terms are kept in graded
// lexicographic order, highest first; that order is simultaneously the
// canonical printing order and the leading-term order used by exact_div.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "sievekit/bigint.hpp"
#include "sievekit/errors.hpp"

namespace sievekit {

using Exponents = std::vector<unsigned>;

// Strict-weak order: a before b iff deg(a) > deg(b), ties broken by
// lexicographically larger exponent vector first.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, BigInt, TermOrder>;

  MultiPoly() = default;  // zero polynomial with no variables
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(std::vector<std::string> vars, BigInt c);
  static MultiPoly variable(std::vector<std::string> vars,
                            const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;  // 0 for the zero polynomial

  // Adds c * prod(vars^exps); drops the term if the coefficient cancels.
  void add_term(const Exponents& exps, const BigInt& c);

  BigInt coefficient(const Exponents& exps) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const BigInt& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }

  bool operator==(const MultiPoly& rhs) const;
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void check_compatible(const MultiPoly& rhs) const;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);

// Exact quotient in Z[vars].  Throws NotDivisible if d does not divide p,
// DivisionByZero if d == 0.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d);

// p ^ e by repeated squaring.
MultiPoly poly_pow(const MultiPoly& p, unsigned e);

// Full integer evaluation; every variable of p must appear in values.
BigInt evaluate_int(const MultiPoly& p,
                    const std::map<std::string, BigInt>& values);

// Simultaneous substitution: every variable of p must be mapped to a
// polynomial over target_vars; the result lives over target_vars.
MultiPoly substitute(const MultiPoly& p,
                     const std::map<std::string, MultiPoly>& images,
                     const std::vector<std::string>& target_vars);

bool is_symmetric(const MultiPoly& p, const std::string& v1,
                  const std::string& v2);

// Rewrites a polynomial symmetric in (v1, v2) over the elementary basis
// e1 = v1 + v2, e2 = v1 * v2.  Result variables are ("e1", "e2").
// Throws NotSymmetric if p is not symmetric in the two variables.
MultiPoly to_elementary_basis(const MultiPoly& p, const std::string& v1,
                              const std::string& v2);

bool has_nonnegative_coefficients(const MultiPoly& p);

// Canonical text, e.g. "s^4 + 3*s^2*t + 2*t^2"; zero prints as "0".
std::string to_canonical_string(const MultiPoly& p);

// Parses the canonical format plus integer literals, '*', '^', parentheses-free
// sums and unary minus.  Unknown variable names raise ParseError.
MultiPoly parse_poly(const std::string& text,
                     const std::vector<std::string>& vars);

}  // namespace sievekit
