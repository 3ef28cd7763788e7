// Enumeration of the combinatorial families carrying a dihedral action on
// vertex labels 1..n, together with the induced action, fixed-point counts,
// and permutation characters.  Enumerations are exhaustive and cached; the
// scale guards keep every family within exact-arithmetic reach.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sievekit/dihedral.hpp"

namespace sievekit {

enum class Family {
  Subsets,         // k-element subsets of {1..n}
  Multisubsets,    // k-element multisubsets of {1..n}
  NCPartitions,    // noncrossing set partitions of {1..n}
  Narayana,        // noncrossing partitions of {1..n} with exactly n-k blocks
  Triangulations,  // triangulations of the convex n-gon, as diagonal sets
  Dissections,     // k pairwise-noncrossing diagonals of the convex n-gon
};

Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

struct FamilyParams {
  unsigned n = 0;
  std::optional<unsigned> k;
};

// One object, canonically normalized: blocks sorted internally and between
// each other (partition-like families keep one vector per block; subset-like
// families use a single vector; polygon families use one {a, b} per
// diagonal with a < b, diagonals sorted).
struct CombObject {
  Family family = Family::Subsets;
  unsigned n = 0;
  std::vector<std::vector<int>> data;

  bool operator==(const CombObject&) const = default;
  bool operator<(const CombObject& rhs) const;
};

// All objects of the family, cached per (family, n, k).  Throws
// ParameterMismatch when k is missing, unexpected, or out of range, and
// ScaleExceeded beyond the supported grid.
const std::vector<CombObject>& enumerate(Family f, const FamilyParams& p);

// Relabels every vertex of x through g and renormalizes.  Throws
// ParameterMismatch when x was built over a different n.
CombObject act(const DihedralElement& g, const CombObject& x, unsigned n);

long long fixed_points_of_element(Family f, const FamilyParams& p,
                                  const DihedralElement& g);

// Common fixed-point count of the class; verifies every member agrees.
long long fixed_points(Family f, const FamilyParams& p, const ConjClass& C);

// The permutation character as exact integer values per conjugacy class.
CharVector permutation_character(Family f, const FamilyParams& p);

}  // namespace sievekit
