// Two-statistic generating polynomials over lattice paths: the (q, t)
// polynomial on Dyck paths via area and bounce, its extension to paths with
// diagonal steps, the single-variable slice oracle used to validate that
// extension, and the conjecture explorer for dissection sieving.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sievekit/polyring.hpp"

namespace sievekit {

// Encoded by rise counts: entry i is the number of N steps strictly before
// the (i+1)-th E step; weakly increasing with i+1 <= entry <= n.
struct DyckPath {
  unsigned n = 0;
  std::vector<unsigned> rise_counts;
};

std::vector<DyckPath> all_dyck_paths(unsigned n);

unsigned area(const DyckPath& p);
unsigned bounce(const DyckPath& p);

// Sum of q^area t^bounce over Dyck paths of size n, cached; n <= 10.
const MultiPoly& qt_catalan(unsigned n);

// Path from (0,0) to (n,n) weakly above the diagonal with n-d north, n-d
// east and d diagonal steps.
struct SchroderPath {
  unsigned n = 0;
  unsigned d = 0;
  std::string steps;  // over 'N', 'E', 'D'
};

std::vector<SchroderPath> all_schroder_paths(unsigned n, unsigned d);

// Area counts full squares under north-east portions plus the diagonal-step
// correction.  The companion statistic counts row pairs (i below j) whose
// upper row is crossed by a north step and whose levels satisfy
// a_i - a_j in {0, 1}; it reduces to the standard pair statistic when d = 0.
unsigned area(const SchroderPath& p);
unsigned bounce(const SchroderPath& p);

// Sum of q^area t^bounce over paths with exactly d diagonal steps, cached;
// 0 <= d <= n <= 10.
const MultiPoly& qt_schroder(unsigned n, unsigned d);

// Inclusion-exclusion refinement: value at d equals the d-step polynomial
// minus the value at d-1, starting from d = 0.
const MultiPoly& little_qt_schroder(unsigned n, unsigned d);

// Verifies the one-variable specialization
//   q^(C(n,2) - C(d,2)) * S_{n,d}(q, 1/q)
//     == [2n-d; n-d, n-d, d]_q / [n-d+1]_q.
bool schroder_slice_oracle(unsigned n, unsigned d);

// Candidate sieving polynomial for triangulations of the odd n-gon:
//   (sign*t)^C(n-2,2) * E(s, sign*t)
// where E is the elementary-basis form of the size-(n-2) two-statistic
// polynomial.  sign must be +1 or -1; even n raises EvenNUnsupported.
MultiPoly triangulation_sieving_poly(unsigned n, int sign);

struct ExploreRow {
  std::string class_label;
  long long fixed = 0;
  std::string value;  // exact evaluation, integer or residue rendering
  bool match = false;
};

struct ExploreCandidate {
  unsigned f = 0;
  int sign = 1;
  bool all_match = false;
  std::vector<ExploreRow> per_class;
};

// Full scan result; candidates ordered by f ascending, sign +1 before -1.
struct ExploreReport {
  std::string family = "dissections";
  unsigned n = 0;
  unsigned k = 0;
  unsigned f_min = 0;
  unsigned f_max = 0;
  bool symmetric = false;
  std::string base;  // canonical text of the base (q, t) polynomial
  std::vector<ExploreCandidate> candidates;
  std::vector<std::pair<unsigned, int>> matching;
};

// Scans every candidate (sign*t)^f * E(s, sign*t) built from the
// inclusion-exclusion polynomial of size n-2 with n-3-k diagonal steps
// against the exact fixed-point counts of k-diagonal dissections of the
// n-gon.  Odd n only; reports data, never asserts.
ExploreReport explore_dissection_conjecture(unsigned n, unsigned k,
                                            unsigned f_min, unsigned f_max);

nlohmann::ordered_json explore_report_to_json(const ExploreReport& report);
std::string explore_report_to_string(const ExploreReport& report);

}  // namespace sievekit
