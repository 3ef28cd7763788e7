#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sievekit/bigint.hpp"
#include "sievekit/cyclotomic.hpp"
#include "sievekit/qanalog.hpp"

using namespace sievekit;

namespace {

BigInt at_one(const MultiPoly& p) {
  return evaluate_int(p, {{"q", BigInt(1)}});
}

BigInt at_minus_one(const MultiPoly& p) {
  return eval_at_root(p, 2, 1).as_integer();
}

MultiPoly qpow(unsigned e, long long c = 1) {
  MultiPoly p({"q"});
  p.add_term({e}, BigInt(c));
  return p;
}

}  // namespace

TEST_CASE("integer analogues") {
  CHECK(to_canonical_string(q_int(0)) == "0");
  CHECK(to_canonical_string(q_int(1)) == "1");
  CHECK(to_canonical_string(q_int(3)) == "q^2 + q + 1");
  CHECK(to_canonical_string(q_factorial(3)) == "q^3 + 2*q^2 + 2*q + 1");
}

TEST_CASE("binomial analogues: frozen values, symmetry, recursion") {
  CHECK(to_canonical_string(q_binomial(4, 2)) ==
        "q^4 + q^3 + 2*q^2 + q + 1");
  CHECK(q_binomial(5, 7).is_zero());
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k) == q_binomial(n, n - k));
      CHECK(at_one(q_binomial(n, k)) == big_binomial(n, k));
      if (n >= 1 && k >= 1)
        CHECK(q_binomial(n, k) ==
              q_binomial(n - 1, k - 1) + qpow(k) * q_binomial(n - 1, k));
    }
}

TEST_CASE("multinomial analogues") {
  CHECK(q_multinomial(7, {3, 4}) == q_binomial(7, 3));
  CHECK(q_multinomial(5, {5}) == MultiPoly::constant({"q"}, BigInt(1)));
  CHECK(at_one(q_multinomial(4, {2, 1, 1})) == 12);
  // Splitting off one part at a time agrees with iterated binomials.
  CHECK(q_multinomial(6, {2, 2, 2}) ==
        q_binomial(6, 2) * q_binomial(4, 2));
  CHECK_THROWS_AS(q_multinomial(5, {2, 2}), Error);
}

TEST_CASE("ballot-number analogues") {
  CHECK(to_canonical_string(q_catalan(2)) == "q^2 + 1");
  CHECK(to_canonical_string(q_catalan(3)) == "q^6 + q^4 + q^3 + q^2 + 1");
  for (unsigned n = 0; n <= 9; ++n)
    CHECK(at_one(q_catalan(n)) == big_catalan(n));
}

TEST_CASE("refined ballot analogues sum to the full polynomial") {
  for (unsigned n = 1; n <= 9; ++n) {
    MultiPoly total({"q"});
    for (unsigned k = 0; k + 1 <= n; ++k) total += q_narayana(n, k);
    CHECK(total == q_catalan(n));
  }
  CHECK_THROWS_AS(q_narayana(3, 3), Error);
}

TEST_CASE("refined ballot analogue carries the exponent shift") {
  // n = 3, k = 1: q^2 * [3][3] / [3] = q^2 + q^3 + q^4.
  CHECK(to_canonical_string(q_narayana(3, 1)) == "q^4 + q^3 + q^2");
  CHECK(to_canonical_string(q_narayana(3, 2)) == "q^6");
}

TEST_CASE("dissection-count analogues") {
  for (unsigned n = 3; n <= 9; ++n)
    for (unsigned k = 0; k + 3 <= n; ++k) {
      BigInt expect = big_binomial(n + k, k + 1) * big_binomial(n - 3, k);
      CHECK(expect % (n + k) == 0);
      CHECK(at_one(q_kirkman(n, k)) == expect / (n + k));
    }
  CHECK(at_one(q_kirkman(5, 1)) == 5);
  CHECK_THROWS_AS(q_kirkman(2, 0), Error);
  CHECK_THROWS_AS(q_kirkman(6, 4), Error);
}

TEST_CASE("area generating polynomials by convolution") {
  CHECK(to_canonical_string(carlitz_riordan(0)) == "1");
  CHECK(to_canonical_string(carlitz_riordan(2)) == "q + 1");
  CHECK(to_canonical_string(carlitz_riordan(3)) == "q^3 + q^2 + 2*q + 1");
  for (unsigned n = 0; n <= 10; ++n)
    CHECK(at_one(carlitz_riordan(n)) == big_catalan(n));
  // Recurrence re-check against explicit convolution.
  for (unsigned n = 0; n <= 8; ++n) {
    MultiPoly sum({"q"});
    for (unsigned k = 0; k <= n; ++k)
      sum += qpow(k) * carlitz_riordan(k) * carlitz_riordan(n - k);
    CHECK(sum == carlitz_riordan(n + 1));
  }
}

TEST_CASE("area polynomials vanish at -1 in even sizes") {
  for (unsigned n = 2; n <= 12; n += 2)
    CHECK(at_minus_one(carlitz_riordan(n)) == 0);
}

TEST_CASE("area polynomials at -1 in odd sizes give smaller ballot counts") {
  for (unsigned k = 1; k <= 6; ++k) {
    unsigned n = 2 * k - 1;
    BigInt lhs = at_minus_one(carlitz_riordan(n));
    if ((n * (n - 1) / 2) % 2 == 1) lhs = -lhs;
    CHECK(lhs == big_catalan(k - 1));
  }
}

TEST_CASE("binomial analogues at -1 follow the halving rule") {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      BigInt got = at_minus_one(q_binomial(n, k));
      BigInt expect = (n % 2 == 0 && k % 2 == 1)
                          ? BigInt(0)
                          : big_binomial(n / 2, k / 2);
      CHECK(got == expect);
    }
}
