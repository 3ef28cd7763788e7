#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sievekit/polyring.hpp"

using namespace sievekit;

namespace {

const std::vector<std::string> kXY = {"x", "y"};

MultiPoly random_poly(std::mt19937& rng, unsigned max_deg, int coeff_bound) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  MultiPoly p(kXY);
  for (unsigned a = 0; a <= max_deg; ++a)
    for (unsigned b = 0; a + b <= max_deg; ++b)
      p.add_term({a, b}, BigInt(coeff(rng)));
  return p;
}

MultiPoly xpow(unsigned a, unsigned b, long long c = 1) {
  MultiPoly p(kXY);
  p.add_term({a, b}, BigInt(c));
  return p;
}

}  // namespace

TEST_CASE("term order is graded lexicographic, highest first") {
  MultiPoly p(kXY);
  p.add_term({0, 0}, BigInt(1));
  p.add_term({2, 0}, BigInt(1));
  p.add_term({1, 1}, BigInt(1));
  p.add_term({0, 2}, BigInt(1));
  p.add_term({1, 0}, BigInt(1));
  CHECK(to_canonical_string(p) == "x^2 + x*y + y^2 + x + 1");
}

TEST_CASE("ring axioms hold on sampled polynomials") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly a = random_poly(rng, 3, 3);
    MultiPoly b = random_poly(rng, 3, 3);
    MultiPoly c = random_poly(rng, 3, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MultiPoly(kXY));
    CHECK(a + MultiPoly(kXY) == a);
    CHECK(a * MultiPoly::constant(kXY, BigInt(1)) == a);
    CHECK(a * MultiPoly(kXY) == MultiPoly(kXY));
  }
}

TEST_CASE("zero coefficients are dropped") {
  MultiPoly p(kXY);
  p.add_term({1, 1}, BigInt(2));
  p.add_term({1, 1}, BigInt(-2));
  CHECK(p.is_zero());
  CHECK(p.coefficient({1, 1}) == 0);
  CHECK(to_canonical_string(p) == "0");
}

TEST_CASE("at most four variables are accepted") {
  CHECK_NOTHROW(MultiPoly({"a", "b", "c", "d"}));
  CHECK_THROWS_AS(MultiPoly({"a", "b", "c", "d", "e"}), Error);
}

TEST_CASE("mixed variable sets are rejected") {
  MultiPoly p = MultiPoly::variable(kXY, "x");
  MultiPoly q = MultiPoly::variable({"s", "t"}, "s");
  CHECK_THROWS_AS(p + q, Error);
  CHECK_THROWS_AS(p * q, Error);
}

TEST_CASE("exact division round-trips sampled products") {
  std::mt19937 rng(987654);
  int done = 0;
  while (done < 30) {
    MultiPoly a = random_poly(rng, 3, 2);
    MultiPoly b = random_poly(rng, 2, 2);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
    ++done;
  }
}

TEST_CASE("exact division failures raise the documented errors") {
  MultiPoly num = xpow(2, 0) + MultiPoly::constant(kXY, BigInt(1));
  MultiPoly den = xpow(1, 0) + MultiPoly::constant(kXY, BigInt(1));
  CHECK_THROWS_AS(exact_div(num, den), NotDivisible);
  CHECK_THROWS_AS(exact_div(num, MultiPoly(kXY)), DivisionByZero);
  // Fails on the coefficient, not the exponents: 2x does not divide x^2.
  CHECK_THROWS_AS(exact_div(xpow(2, 0), xpow(1, 0, 2)), NotDivisible);
}

TEST_CASE("power by repeated squaring matches iterated product") {
  MultiPoly base = xpow(1, 0) + xpow(0, 1) + MultiPoly::constant(kXY, BigInt(2));
  MultiPoly expect = MultiPoly::constant(kXY, BigInt(1));
  for (unsigned e = 0; e <= 6; ++e) {
    CHECK(poly_pow(base, e) == expect);
    expect = expect * base;
  }
}

TEST_CASE("integer evaluation is a ring map") {
  std::mt19937 rng(5150);
  std::map<std::string, BigInt> at{{"x", BigInt(3)}, {"y", BigInt(-2)}};
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly a = random_poly(rng, 3, 3);
    MultiPoly b = random_poly(rng, 3, 3);
    CHECK(evaluate_int(a + b, at) == evaluate_int(a, at) + evaluate_int(b, at));
    CHECK(evaluate_int(a * b, at) == evaluate_int(a, at) * evaluate_int(b, at));
  }
  CHECK(evaluate_int(xpow(2, 1, 5), at) == 5 * 9 * -2);
}

TEST_CASE("substitution composes with evaluation") {
  // p(x, y) with x -> u + v, y -> u*v, then evaluated at (u, v) = (2, 3),
  // must equal p(5, 6).
  std::mt19937 rng(777);
  const std::vector<std::string> kUV = {"u", "v"};
  MultiPoly u = MultiPoly::variable(kUV, "u");
  MultiPoly v = MultiPoly::variable(kUV, "v");
  std::map<std::string, MultiPoly> images{{"x", u + v}, {"y", u * v}};
  std::map<std::string, BigInt> at_uv{{"u", BigInt(2)}, {"v", BigInt(3)}};
  std::map<std::string, BigInt> at_xy{{"x", BigInt(5)}, {"y", BigInt(6)}};
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly p = random_poly(rng, 4, 3);
    CHECK(evaluate_int(substitute(p, images, kUV), at_uv) ==
          evaluate_int(p, at_xy));
  }
}

TEST_CASE("symmetry detection") {
  CHECK(is_symmetric(xpow(2, 0) + xpow(0, 2), "x", "y"));
  CHECK(is_symmetric(xpow(1, 1, 7), "x", "y"));
  CHECK_FALSE(is_symmetric(xpow(2, 0) + xpow(0, 1), "x", "y"));
}

TEST_CASE("elementary basis round-trips symmetric polynomials") {
  std::mt19937 rng(424242);
  const std::vector<std::string> kE = {"e1", "e2"};
  std::map<std::string, MultiPoly> back{
      {"e1", MultiPoly::variable(kXY, "x") + MultiPoly::variable(kXY, "y")},
      {"e2", MultiPoly::variable(kXY, "x") * MultiPoly::variable(kXY, "y")}};
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly half = random_poly(rng, 4, 3);
    MultiPoly sym = half;
    // Mirror each term to force symmetry.
    for (const auto& [exps, c] : half.terms())
      sym.add_term({exps[1], exps[0]}, c);
    MultiPoly eb = to_elementary_basis(sym, "x", "y");
    CHECK(eb.vars() == kE);
    CHECK(substitute(eb, back, kXY) == sym);
  }
}

TEST_CASE("known elementary-basis forms") {
  // x^2 + y^2 = e1^2 - 2 e2 and x^3 + y^3 = e1^3 - 3 e1 e2.
  MultiPoly eb2 = to_elementary_basis(xpow(2, 0) + xpow(0, 2), "x", "y");
  const std::vector<std::string> kE = {"e1", "e2"};
  MultiPoly e1 = MultiPoly::variable(kE, "e1");
  MultiPoly e2 = MultiPoly::variable(kE, "e2");
  CHECK(eb2 == e1 * e1 - e2 * BigInt(2));
  MultiPoly eb3 = to_elementary_basis(xpow(3, 0) + xpow(0, 3), "x", "y");
  CHECK(eb3 == e1 * e1 * e1 - e1 * e2 * BigInt(3));
}

TEST_CASE("asymmetric input to the elementary basis is rejected") {
  CHECK_THROWS_AS(to_elementary_basis(xpow(2, 0) + xpow(0, 1), "x", "y"),
                  NotSymmetric);
}

TEST_CASE("coefficient sign scan") {
  CHECK(has_nonnegative_coefficients(xpow(2, 0) + xpow(1, 1, 3)));
  CHECK_FALSE(has_nonnegative_coefficients(xpow(2, 0) - xpow(1, 1)));
}

TEST_CASE("canonical rendering conventions") {
  CHECK(to_canonical_string(MultiPoly(kXY)) == "0");
  CHECK(to_canonical_string(MultiPoly::constant(kXY, BigInt(-7))) == "-7");
  CHECK(to_canonical_string(xpow(1, 0, -1) + MultiPoly::constant(kXY, BigInt(1))) ==
        "-x + 1");
  CHECK(to_canonical_string(xpow(2, 3, 4) + xpow(0, 1, -2)) ==
        "4*x^2*y^3 - 2*y");
  CHECK(to_canonical_string(xpow(1, 1)) == "x*y");
}

TEST_CASE("parser round-trips canonical text bit for bit") {
  std::mt19937 rng(13579);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly p = random_poly(rng, 4, 5);
    std::string text = to_canonical_string(p);
    MultiPoly q = parse_poly(text, kXY);
    CHECK(q == p);
    CHECK(to_canonical_string(q) == text);
  }
  CHECK(parse_poly("s^4 + 3*s^2*t + 2*t^2", {"s", "t"}) ==
        parse_poly("2*t^2 + 3*s^2*t + s^4", {"s", "t"}));
}

TEST_CASE("parser rejects unknown variables and malformed input") {
  CHECK_THROWS_AS(parse_poly("x + z", kXY), ParseError);
  CHECK_THROWS_AS(parse_poly("x + ", kXY), ParseError);
  CHECK_THROWS_AS(parse_poly("^2", kXY), ParseError);
}

TEST_CASE("total degree") {
  CHECK(MultiPoly(kXY).total_degree() == 0);
  CHECK((xpow(2, 3) + xpow(4, 0)).total_degree() == 5);
}
