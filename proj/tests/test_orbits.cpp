#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "sievekit/bigint.hpp"
#include "sievekit/orbits.hpp"

using namespace sievekit;

namespace {

FamilyParams params(unsigned n) { return FamilyParams{n, std::nullopt}; }
FamilyParams params(unsigned n, unsigned k) { return FamilyParams{n, k}; }

std::size_t count(Family f, const FamilyParams& p) {
  return enumerate(f, p).size();
}

const ConjClass& class_by_label(unsigned n, const std::string& label) {
  for (const auto& cls : conjugacy_classes(n))
    if (cls.label == label) return cls;
  throw Error("no class labeled " + label);
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (Family f : {Family::Subsets, Family::Multisubsets, Family::NCPartitions,
                   Family::Narayana, Family::Triangulations,
                   Family::Dissections})
    CHECK(family_from_string(family_to_string(f)) == f);
  CHECK_THROWS_AS(family_from_string("heptagons"), Error);
}

TEST_CASE("cardinalities match the classical counting formulas") {
  for (unsigned n = 3; n <= 8; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(BigInt(count(Family::Subsets, params(n, k))) == big_binomial(n, k));
  for (unsigned n = 3; n <= 8; ++n)
    for (unsigned k = 0; k <= 4; ++k)
      CHECK(BigInt(count(Family::Multisubsets, params(n, k))) ==
            big_binomial(n + k - 1, k));
  for (unsigned n = 3; n <= 9; ++n)
    CHECK(BigInt(count(Family::NCPartitions, params(n))) == big_catalan(n));
  for (unsigned n = 3; n <= 8; ++n) {
    BigInt total = 0;
    for (unsigned k = 0; k < n; ++k) {
      BigInt narayana =
          big_binomial(n, k) * big_binomial(n, k + 1) / n;
      CHECK(BigInt(count(Family::Narayana, params(n, k))) == narayana);
      total += narayana;
    }
    CHECK(total == big_catalan(n));
  }
  for (unsigned n = 3; n <= 9; ++n)
    CHECK(BigInt(count(Family::Triangulations, params(n))) ==
          big_catalan(n - 2));
  for (unsigned n = 3; n <= 8; ++n)
    for (unsigned k = 0; k <= n - 3; ++k)
      CHECK(BigInt(count(Family::Dissections, params(n, k))) ==
            big_binomial(n + k, k + 1) * big_binomial(n - 3, k) / (n + k));
}

TEST_CASE("enumerations are sorted and duplicate-free") {
  auto check_sorted = [](const std::vector<CombObject>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK(v[i] < v[i + 1]);
  };
  check_sorted(enumerate(Family::Subsets, params(6, 3)));
  check_sorted(enumerate(Family::Multisubsets, params(5, 3)));
  check_sorted(enumerate(Family::NCPartitions, params(5)));
  check_sorted(enumerate(Family::Triangulations, params(7)));
  check_sorted(enumerate(Family::Dissections, params(7, 2)));
}

TEST_CASE("dissections with no diagonals is the single empty object") {
  const auto& objects = enumerate(Family::Dissections, params(6, 0));
  REQUIRE(objects.size() == 1);
  CHECK(objects[0].data.empty());
}

TEST_CASE("the relabeling map is a group action") {
  struct Probe {
    Family f;
    FamilyParams p;
  };
  const Probe probes[] = {
      {Family::Subsets, params(5, 2)},
      {Family::Multisubsets, params(4, 2)},
      {Family::NCPartitions, params(4)},
      {Family::Triangulations, params(5)},
      {Family::Dissections, params(6, 1)},
  };
  for (const auto& probe : probes) {
    unsigned n = probe.p.n;
    std::vector<DihedralElement> group;
    for (unsigned k = 0; k < n; ++k) {
      group.push_back({false, k});
      group.push_back({true, k});
    }
    const auto& objects = enumerate(probe.f, probe.p);
    for (const auto& x : objects) {
      CHECK(act({false, 0}, x, n) == x);
      for (const auto& g : group) {
        CombObject gx = act(g, x, n);
        // Images stay inside the enumerated family.
        CHECK(std::binary_search(objects.begin(), objects.end(), gx));
        for (const auto& h : group)
          CHECK(act(dihedral_mul(n, h, g), x, n) == act(h, gx, n));
      }
    }
  }
}

TEST_CASE("acting with a mismatched vertex count is rejected") {
  CombObject x = enumerate(Family::Subsets, params(5, 2)).front();
  CHECK_THROWS_AS(act({false, 1}, x, 6), ParameterMismatch);
}

TEST_CASE("a reflection fixes the partition aligned with its axis") {
  // In the triangle, the reflection fixing vertex 1 swaps vertices 2 and 3.
  DihedralElement g{true, 2};
  CHECK(act_vertex(3, g, 1) == 1);
  CHECK(act_vertex(3, g, 2) == 3);
  CombObject x;
  x.family = Family::NCPartitions;
  x.n = 3;
  x.data = {{1}, {2, 3}};
  CHECK(act(g, x, 3) == x);
  CHECK(fixed_points_of_element(Family::NCPartitions, params(3), g) == 3);
}

TEST_CASE("fixed-point counts for pinned small cases") {
  CHECK(fixed_points(Family::Subsets, params(5, 2),
                     class_by_label(5, "reflections")) == 2);

  CharVector chi = permutation_character(Family::Multisubsets, params(3, 2));
  CHECK(chi.name == "multisubsets(k=2)");
  REQUIRE(chi.values.size() == 3);
  CHECK(chi.values[0] == CycloInt::from_integer(3, BigInt(6)));
  CHECK(chi.values[1] == CycloInt::from_integer(3, BigInt(0)));
  CHECK(chi.values[2] == CycloInt::from_integer(3, BigInt(2)));

  CharVector tri = permutation_character(Family::Triangulations, params(5));
  REQUIRE(tri.values.size() == 4);
  CHECK(tri.values[0] == CycloInt::from_integer(5, BigInt(5)));
  CHECK(tri.values[1] == CycloInt::from_integer(5, BigInt(0)));
  CHECK(tri.values[2] == CycloInt::from_integer(5, BigInt(0)));
  CHECK(tri.values[3] == CycloInt::from_integer(5, BigInt(1)));
}

TEST_CASE("permutation characters decompose with nonnegative multiplicities") {
  struct Probe {
    Family f;
    FamilyParams p;
  };
  const Probe probes[] = {
      {Family::Subsets, params(7, 3)},    {Family::Multisubsets, params(5, 3)},
      {Family::NCPartitions, params(6)},  {Family::Narayana, params(6, 2)},
      {Family::Triangulations, params(6)}, {Family::Dissections, params(6, 2)},
  };
  for (const auto& probe : probes) {
    CharVector chi = permutation_character(probe.f, probe.p);
    auto mult = decompose_character(probe.p.n, chi);
    long long dim_total = 0;
    for (const auto& [name, m] : mult) {
      CHECK(m >= 0);
      for (const auto& irr : irreducible_characters(probe.p.n))
        if (irr.name == name)
          dim_total +=
              m * static_cast<long long>(irr.value_at_identity().as_integer());
    }
    // Multiplicities resum to the number of objects.
    CHECK(dim_total ==
          static_cast<long long>(enumerate(probe.f, probe.p).size()));
  }
}

TEST_CASE("orbit counts from class-weighted fixed points are integers") {
  struct Probe {
    Family f;
    FamilyParams p;
  };
  const Probe probes[] = {
      {Family::Subsets, params(6, 2)},     {Family::Multisubsets, params(6, 3)},
      {Family::NCPartitions, params(7)},   {Family::Narayana, params(7, 3)},
      {Family::Triangulations, params(7)}, {Family::Dissections, params(7, 2)},
  };
  for (const auto& probe : probes) {
    long long weighted = 0;
    for (const auto& cls : conjugacy_classes(probe.p.n))
      weighted += static_cast<long long>(cls.size) *
                  fixed_points(probe.f, probe.p, cls);
    CHECK(weighted % (2 * probe.p.n) == 0);
    CHECK(weighted / (2 * probe.p.n) > 0);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(enumerate(Family::Subsets, params(5)), ParameterMismatch);
  CHECK_THROWS_AS(enumerate(Family::Subsets, params(5, 6)), ParameterMismatch);
  CHECK_THROWS_AS(enumerate(Family::NCPartitions, params(5, 2)),
                  ParameterMismatch);
  CHECK_THROWS_AS(enumerate(Family::Triangulations, params(5, 1)),
                  ParameterMismatch);
  CHECK_THROWS_AS(enumerate(Family::Narayana, params(5, 5)),
                  ParameterMismatch);
  CHECK_THROWS_AS(enumerate(Family::Dissections, params(6, 4)),
                  ParameterMismatch);
}

TEST_CASE("scale guards") {
  CHECK_THROWS_AS(enumerate(Family::Subsets, params(13, 2)), ScaleExceeded);
  CHECK_THROWS_AS(enumerate(Family::Multisubsets, params(5, 9)),
                  ScaleExceeded);
  CHECK_THROWS_AS(enumerate(Family::NCPartitions, params(12)), ScaleExceeded);
  CHECK_THROWS_AS(enumerate(Family::Triangulations, params(12)),
                  ScaleExceeded);
  CHECK_THROWS_AS(enumerate(Family::Triangulations, params(2)),
                  ParameterMismatch);
}
