// Exact arithmetic in Z[xi_n] as residues modulo the n-th cyclotomic
// polynomial.  No floating point is involved anywhere; a decimal rendering
// for human-readable output is provided separately and is display-only.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sievekit/polyring.hpp"

namespace sievekit {

// Residue in Z[q]/(Phi_n(q)), stored as phi(n) coefficients for
// 1, q, ..., q^(phi(n)-1).  Since Phi_n divides q^n - 1, powers of the root
// reduce exponents mod n before reduction mod Phi_n.
class CycloInt {
 public:
  CycloInt() = default;  // conductor 0 placeholder, unusable in arithmetic

  static CycloInt zero(unsigned n);
  static CycloInt from_integer(unsigned n, const BigInt& v);
  // xi_n^e for any integer e (reduced mod n).
  static CycloInt root_power(unsigned n, long long e);

  unsigned conductor() const { return n_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  CycloInt operator-() const;
  CycloInt& operator+=(const CycloInt& rhs);
  CycloInt& operator-=(const CycloInt& rhs);
  CycloInt& operator*=(const CycloInt& rhs);
  CycloInt& operator*=(const BigInt& c);
  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator*(CycloInt a, const CycloInt& b) { return a *= b; }
  friend CycloInt operator*(CycloInt a, const BigInt& c) { return a *= c; }

  bool operator==(const CycloInt& rhs) const;
  bool operator!=(const CycloInt& rhs) const { return !(*this == rhs); }

  // Complex conjugate, i.e. the ring map xi -> xi^(-1).
  CycloInt conj() const;

  bool is_rational() const;
  // The value as a rational integer; throws NotRational otherwise.
  BigInt as_integer() const;

  CycloInt pow(unsigned e) const;

  // "[c0, c1, ...] (mod Phi_n)"
  std::string to_string() const;

 private:
  CycloInt(unsigned n, std::vector<BigInt> c) : n_(n), c_(std::move(c)) {}

  void check_conductor(const CycloInt& rhs) const;

  unsigned n_ = 0;
  std::vector<BigInt> c_;
};

// Euler totient, used for residue lengths.
unsigned euler_phi(unsigned n);

// The n-th cyclotomic polynomial as a univariate polynomial in "q",
// computed by exact division of q^n - 1 by the proper-divisor factors.
MultiPoly cyclotomic_poly(unsigned n);

// Evaluates a univariate polynomial in "q" at xi_n^l (l reduced mod n).
CycloInt eval_at_root(const MultiPoly& p, unsigned n, long long l);

// Evaluates a bivariate polynomial at a pair of cyclotomic integers sharing
// one conductor; mixed conductors raise ConductorMismatch.
CycloInt eval_bivariate_at_class(const MultiPoly& p, const CycloInt& s_val,
                                 const CycloInt& t_val);

inline BigInt as_integer(const CycloInt& v) { return v.as_integer(); }

// Display-only numeric value of the residue at xi_n = exp(2*pi*i/n).
std::complex<double> approximate_complex(const CycloInt& v);

}  // namespace sievekit
