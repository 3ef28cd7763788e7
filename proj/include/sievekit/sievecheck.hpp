// The verification engine: pairs a polynomial with a family action and
// checks, class by class and with exact arithmetic, that root-of-unity or
// generator-pair evaluations reproduce fixed-point counts.  Reports are
// pure data; suites bundle the standard checks plus deliberately perturbed
// controls that are expected to fail.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sievekit/orbits.hpp"
#include "sievekit/polyring.hpp"

namespace sievekit {

struct ClassRecord {
  std::string class_label;
  unsigned size = 1;       // class size (1 for every rotation power row)
  std::string evaluation;  // exact value, integer or residue rendering
  long long fixed = 0;
  bool match = false;

  bool operator==(const ClassRecord&) const = default;
};

struct SievingReport {
  std::string kind;    // "cyclic", "dihedral" or "table1"
  std::string family;
  unsigned n = 0;
  std::optional<unsigned> k;
  std::string polynomial;  // canonical text of the main polynomial
  // table1 kind only: canonical text of the polynomial behind each column
  // group ("rotations", "reflections", "vertex-reflections",
  // "edge-reflections").
  std::map<std::string, std::string> cell_polynomials;
  bool control = false;     // a deliberately wrong check, expected to fail
  bool burnside_ok = false; // fixed-point total divisible by the group order
  bool pass = false;
  std::vector<ClassRecord> rows;

  bool operator==(const SievingReport&) const = default;
};

// Checks evaluations of a univariate polynomial in "q" at all n-th root
// powers against rotation fixed-point counts.
SievingReport verify_cyclic(Family f, const FamilyParams& p,
                            const MultiPoly& poly);

// Checks evaluations of a bivariate polynomial in (s, t) at the generator
// value pairs of every conjugacy class; odd n only, even n raises
// EvenNUnsupported.
SievingReport verify_dihedral(Family f, const FamilyParams& p,
                              const MultiPoly& poly);

const std::vector<std::string>& suite_names();

// Runs one named suite over its default grid, clamped to [n_min, n_max]
// when given.  Every suite includes at least one control report.
std::vector<SievingReport> verify_suite(const std::string& suite,
                                        std::optional<unsigned> n_min,
                                        std::optional<unsigned> n_max);

// True when every non-control report passes.
bool suite_ok(const std::vector<SievingReport>& reports);

nlohmann::ordered_json report_to_json(const SievingReport& report);
SievingReport report_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json reports_to_json(const std::vector<SievingReport>& rs);

}  // namespace sievekit
