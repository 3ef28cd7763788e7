// The dihedral group of order 2n: elements, conjugacy classes for odd and
// even n, exact irreducible characters over Z[xi_n], and representation-ring
// arithmetic on character vectors.
//
// Vertices are labeled 1..n clockwise; r sends i to i+1 (mod n) and the
// reference reflection s sends i to n+1-i.  All character values are exact
// cyclotomic integers, never floating-point cosines.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sievekit/cyclotomic.hpp"

namespace sievekit {

// r^index (reflection == false) or s * r^index (reflection == true),
// 0 <= index < n.
struct DihedralElement {
  bool reflection = false;
  unsigned index = 0;

  bool operator==(const DihedralElement&) const = default;
};

// Group law under composition of vertex maps (a applied after b).
DihedralElement dihedral_mul(unsigned n, const DihedralElement& a,
                             const DihedralElement& b);
DihedralElement dihedral_inverse(unsigned n, const DihedralElement& a);

// Image of vertex i (1-based) under g.
unsigned act_vertex(unsigned n, const DihedralElement& g, unsigned i);

std::string element_name(const DihedralElement& g);

struct ConjClass {
  DihedralElement representative;
  unsigned size = 0;
  // "identity", "rotation-pair(l)", "half-turn", "reflections" (odd n),
  // "even-reflections" / "odd-reflections" (even n, by the parity of j in
  // s r^j).
  std::string label;
  // l for rotation classes (0 for the identity, n/2 for the half-turn).
  int rotation_index = -1;
  // For reflection classes: number of polygon vertices fixed by any member
  // (1 for odd n; 2 for the vertex axis type, 0 for the edge axis type).
  int fixed_vertices = -1;
  std::vector<DihedralElement> members;
};

// Full class list for n >= 3, cached.  Order: identity, rotation pairs by
// increasing l, half-turn (even n), then reflection classes (even n: the
// even-index class before the odd-index class).
const std::vector<ConjClass>& conjugacy_classes(unsigned n);

// A class function with exact values, aligned with conjugacy_classes(n).
struct CharVector {
  unsigned n = 0;
  std::string name;
  std::vector<CycloInt> values;

  bool all_integer() const;
  CycloInt value_at_identity() const { return values.at(0); }
};

// Irreducibles: "triv", "det", then for even n "chi_b" and "chi_b_det",
// then the two-dimensional "z_m" for 1 <= m <= floor((n-1)/2).  Cached.
const std::vector<CharVector>& irreducible_characters(unsigned n);

// Sieving generator values (chi_z1(C), -chi_det(C)) for odd n; identity
// gives (2, -1), rotation pair l gives (xi^l + xi^-l, -1), reflections give
// (0, 1).  Throws EvenNUnsupported for even n.
std::pair<CycloInt, CycloInt> generator_values(unsigned n, const ConjClass& C);

// Checks z_{k+1} = z_k z_1 - z_{k-1} against the character table for
// k <= (n-1)/2 and the boundary identities z_0 = z_n = triv + det.
// Requires odd n and kmax <= n.
bool zk_recursion_check(unsigned n, unsigned kmax);

// Multiplicity of each irreducible in chi via the exact inner product
// (1/2n) sum_C |C| chi(C) conj(chi_irr(C)) computed in Z[xi_n].
// Throws NonIntegral if any inner product fails to be a rational integer
// multiple of 2n.
std::map<std::string, long long> decompose_character(unsigned n,
                                                     const CharVector& chi);

}  // namespace sievekit
