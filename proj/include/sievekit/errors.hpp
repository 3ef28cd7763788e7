// Exception hierarchy shared by all sievekit modules.
#pragma once

#include <stdexcept>
#include <string>

namespace sievekit {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact_div: divisor does not divide the dividend in Z[vars].
struct NotDivisible : Error {
  explicit NotDivisible(const std::string& what) : Error(what) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// to_elementary_basis: input is not symmetric in the two variables.
struct NotSymmetric : Error {
  explicit NotSymmetric(const std::string& what) : Error(what) {}
};

// as_integer: cyclotomic residue has nonzero coefficients beyond the constant.
struct NotRational : Error {
  explicit NotRational(const std::string& what) : Error(what) {}
};

// Mixed-conductor arithmetic on cyclotomic integers.
struct ConductorMismatch : Error {
  explicit ConductorMismatch(const std::string& what) : Error(what) {}
};

// Dihedral sieving generators (z1, -det) are defined for odd n only.
struct EvenNUnsupported : Error {
  explicit EvenNUnsupported(const std::string& what) : Error(what) {}
};

// Character inner product did not come out a rational integer multiple of |G|.
struct NonIntegral : Error {
  explicit NonIntegral(const std::string& what) : Error(what) {}
};

// Enumeration request beyond the supported desk-scale bounds.
struct ScaleExceeded : Error {
  explicit ScaleExceeded(const std::string& what) : Error(what) {}
};

// Group element and combinatorial object disagree on the ground set size.
struct ParameterMismatch : Error {
  explicit ParameterMismatch(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace sievekit
