#include "sievekit/sievecheck.hpp"

#include <algorithm>

#include "sievekit/cyclotomic.hpp"
#include "sievekit/errors.hpp"
#include "sievekit/fibonomial.hpp"
#include "sievekit/qanalog.hpp"
#include "sievekit/qtcat.hpp"

namespace sievekit {

namespace {

std::string render(const CycloInt& v) {
  if (v.is_rational()) return v.as_integer().str();
  return v.to_string();
}

ClassRecord make_row(const std::string& label, unsigned size,
                     const CycloInt& value, long long fixed) {
  ClassRecord row;
  row.class_label = label;
  row.size = size;
  row.evaluation = render(value);
  row.fixed = fixed;
  row.match = value.is_rational() && value.as_integer() == BigInt(fixed);
  return row;
}

void require_vars(const MultiPoly& poly,
                  const std::vector<std::string>& expected) {
  if (poly.vars() != expected && !poly.is_zero())
    throw ParameterMismatch("polynomial uses unexpected variables");
}

void finish_report(SievingReport& report, const BigInt& fixed_total,
                   unsigned group_order) {
  report.burnside_ok = fixed_total % group_order == 0;
  report.pass = report.burnside_ok;
  for (const auto& row : report.rows)
    report.pass = report.pass && row.match;
}

// Exact value of a univariate polynomial in q at -1.
BigInt eval_at_minus_one(const MultiPoly& poly) {
  return eval_at_root(poly, 2, 1).as_integer();
}

MultiPoly constant_q(const BigInt& v) {
  return MultiPoly::constant({"q"}, v);
}

}  // namespace

SievingReport verify_cyclic(Family f, const FamilyParams& p,
                            const MultiPoly& poly) {
  require_vars(poly, {"q"});
  SievingReport report;
  report.kind = "cyclic";
  report.family = family_to_string(f);
  report.n = p.n;
  report.k = p.k;
  report.polynomial = to_canonical_string(poly);
  BigInt fixed_total = 0;
  for (unsigned l = 0; l < p.n; ++l) {
    DihedralElement rot{false, l};
    long long fixed = fixed_points_of_element(f, p, rot);
    fixed_total += fixed;
    report.rows.push_back(
        make_row(element_name(rot), 1, eval_at_root(poly, p.n, l), fixed));
  }
  finish_report(report, fixed_total, p.n);
  return report;
}

SievingReport verify_dihedral(Family f, const FamilyParams& p,
                              const MultiPoly& poly) {
  if (p.n % 2 == 0)
    throw EvenNUnsupported(
        "generator-pair verification is defined for odd n only");
  require_vars(poly, {"s", "t"});
  SievingReport report;
  report.kind = "dihedral";
  report.family = family_to_string(f);
  report.n = p.n;
  report.k = p.k;
  report.polynomial = to_canonical_string(poly);
  BigInt fixed_total = 0;
  for (const auto& cls : conjugacy_classes(p.n)) {
    long long fixed = fixed_points(f, p, cls);
    fixed_total += BigInt(cls.size) * fixed;
    auto [s_val, t_val] = generator_values(p.n, cls);
    report.rows.push_back(
        make_row(cls.label, cls.size,
                 eval_bivariate_at_class(poly, s_val, t_val), fixed));
  }
  finish_report(report, fixed_total, 2 * p.n);
  return report;
}

namespace {

// One table check: rotation classes evaluate the q-polynomial at the
// matching root power, reflection classes evaluate their column polynomial
// at -1 (constant cells included).
struct TableCells {
  MultiPoly rotations;
  // Odd n uses reflections; even n uses vertex (axis through two vertices)
  // and edge (axis through two edge midpoints) columns.
  MultiPoly reflections;
  MultiPoly vertex;
  MultiPoly edge;
};

SievingReport verify_table1(Family f, const FamilyParams& p,
                            const TableCells& cells, bool control) {
  SievingReport report;
  report.kind = "table1";
  report.family = family_to_string(f);
  report.n = p.n;
  report.k = p.k;
  report.control = control;
  report.polynomial = to_canonical_string(cells.rotations);
  report.cell_polynomials["rotations"] = report.polynomial;
  if (p.n % 2 == 1) {
    report.cell_polynomials["reflections"] =
        to_canonical_string(cells.reflections);
  } else {
    report.cell_polynomials["vertex-reflections"] =
        to_canonical_string(cells.vertex);
    report.cell_polynomials["edge-reflections"] =
        to_canonical_string(cells.edge);
  }
  BigInt fixed_total = 0;
  for (const auto& cls : conjugacy_classes(p.n)) {
    long long fixed = fixed_points(f, p, cls);
    fixed_total += BigInt(cls.size) * fixed;
    CycloInt value;
    if (!cls.representative.reflection) {
      value = eval_at_root(cells.rotations, p.n,
                           static_cast<long long>(cls.rotation_index));
    } else {
      const MultiPoly& cell =
          p.n % 2 == 1 ? cells.reflections
                       : (cls.fixed_vertices > 0 ? cells.vertex : cells.edge);
      value = CycloInt::from_integer(p.n, eval_at_minus_one(cell));
    }
    report.rows.push_back(make_row(cls.label, cls.size, value, fixed));
  }
  finish_report(report, fixed_total, 2 * p.n);
  return report;
}

// Exact constant (a * C_m(-1)) / b; the division must come out exact.
BigInt scaled_catalan_at_minus_one(unsigned a, unsigned m, unsigned b) {
  BigInt num = BigInt(a) * eval_at_minus_one(q_catalan(m));
  if (num % b != 0)
    throw NonIntegral("reflection cell is not an integer");
  return num / b;
}

TableCells subsets_cells(unsigned n, unsigned k) {
  TableCells cells;
  cells.rotations = q_binomial(n, k);
  if (n % 2 == 1) {
    cells.reflections = q_binomial(n, k);
  } else {
    cells.edge = q_binomial(n, k);
    cells.vertex = q_binomial(n - 2, k);
    if (k >= 1) cells.vertex += q_binomial(n - 2, k - 1) * BigInt(2);
    if (k >= 2) cells.vertex += q_binomial(n - 2, k - 2);
  }
  return cells;
}

TableCells multisubsets_cells(unsigned n, unsigned k) {
  TableCells cells;
  cells.rotations = q_binomial(n + k - 1, k);
  if (n % 2 == 1) {
    cells.reflections = q_binomial(n + k - 1, k);
  } else {
    cells.edge = q_binomial(n + k - 1, k);
    cells.vertex = q_binomial(n + k + 1, k);
    if (k >= 1) cells.vertex += q_binomial(n + k, k - 1) * BigInt(2);
    if (k >= 2) cells.vertex += q_binomial(n + k - 1, k - 2);
  }
  return cells;
}

TableCells ncpartitions_cells(unsigned n) {
  TableCells cells;
  cells.rotations = q_catalan(n);
  if (n % 2 == 1) {
    cells.reflections = q_catalan(n);
  } else {
    cells.vertex = q_catalan(n);
    cells.edge = q_catalan(n);
  }
  return cells;
}

TableCells narayana_cells(unsigned n, unsigned k) {
  TableCells cells;
  cells.rotations = q_narayana(n, k);
  if (n % 2 == 1) {
    cells.reflections = q_narayana(n, k);
  } else {
    cells.vertex = q_narayana(n, k);
    cells.edge = q_narayana(n, k);
  }
  return cells;
}

TableCells triangulations_cells(unsigned n) {
  TableCells cells;
  cells.rotations = q_catalan(n - 2);
  if (n % 2 == 1) {
    cells.reflections =
        constant_q(scaled_catalan_at_minus_one(2, n - 3, n - 1));
  } else {
    cells.vertex = constant_q(scaled_catalan_at_minus_one(4, n - 2, n));
    cells.edge = constant_q(BigInt(0));
  }
  return cells;
}

// The vertex-reflection column exactly as printed in the source table;
// wrong at (n, k) = (4, 2) and (6, 2) and kept only as a failing control.
TableCells subsets_cells_as_printed(unsigned n, unsigned k) {
  TableCells cells = subsets_cells(n, k);
  cells.vertex = q_binomial(n, k);
  if (k >= 1) cells.vertex += q_binomial(n - 2, k - 1) * BigInt(2);
  if (k >= 2) cells.vertex += q_binomial(n - 2, k - 2);
  return cells;
}

TableCells multisubsets_cells_as_printed(unsigned n, unsigned k) {
  TableCells cells = multisubsets_cells(n, k);
  cells.vertex = q_binomial(n + k - 2, k);
  if (k >= 1) cells.vertex += q_binomial(n + k - 3, k - 1) * BigInt(2);
  if (k >= 2) cells.vertex += q_binomial(n + k - 3, k - 2);
  return cells;
}

MultiPoly perturb(const MultiPoly& poly) {
  return poly + MultiPoly::constant(poly.vars(), BigInt(1));
}

std::vector<unsigned> clamp_range(std::vector<unsigned> ns,
                                  std::optional<unsigned> n_min,
                                  std::optional<unsigned> n_max) {
  std::vector<unsigned> out;
  for (unsigned n : ns) {
    if (n_min && n < *n_min) continue;
    if (n_max && n > *n_max) continue;
    out.push_back(n);
  }
  return out;
}

std::vector<unsigned> range_vec(unsigned lo, unsigned hi) {
  std::vector<unsigned> out;
  for (unsigned n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::vector<unsigned> odd_of(const std::vector<unsigned>& ns, unsigned cap) {
  std::vector<unsigned> out;
  for (unsigned n : ns)
    if (n % 2 == 1 && n <= cap) out.push_back(n);
  return out;
}

using Reports = std::vector<SievingReport>;

void mark_control(Reports& out, SievingReport report) {
  report.control = true;
  out.push_back(std::move(report));
}

// The family suites run the two-variable generator-pair grids over odd n;
// rotation-only coverage for the same families lives in "example-1.2".
void suite_subsets(Reports& out, std::optional<unsigned> n_min,
                   std::optional<unsigned> n_max) {
  auto ns = odd_of(clamp_range(range_vec(3, 9), n_min, n_max), 9);
  for (unsigned n : ns)
    for (unsigned k = 0; k <= n; ++k)
      out.push_back(verify_dihedral(Family::Subsets, {n, k}, fibonomial(n, k)));
  if (!ns.empty()) {
    unsigned n = ns.front();
    mark_control(out, verify_dihedral(Family::Subsets, {n, 1},
                                      perturb(fibonomial(n, 1))));
  }
}

void suite_multisubsets(Reports& out, std::optional<unsigned> n_min,
                        std::optional<unsigned> n_max) {
  auto ns = odd_of(clamp_range(range_vec(3, 7), n_min, n_max), 7);
  for (unsigned n : ns)
    for (unsigned k = 0; k <= 4; ++k)
      out.push_back(verify_dihedral(Family::Multisubsets, {n, k},
                                    fibonomial(n + k - 1, k)));
  if (!ns.empty()) {
    unsigned n = ns.front();
    mark_control(out, verify_dihedral(Family::Multisubsets, {n, 2},
                                      perturb(fibonomial(n + 1, 2))));
  }
}

void suite_ncpartitions(Reports& out, std::optional<unsigned> n_min,
                        std::optional<unsigned> n_max) {
  auto ns = odd_of(clamp_range(range_vec(3, 9), n_min, n_max), 9);
  for (unsigned n : ns)
    out.push_back(verify_dihedral(Family::NCPartitions, {n, {}},
                                  st_catalan(n)));
  if (!ns.empty()) {
    unsigned n = ns.front();
    mark_control(out, verify_dihedral(Family::NCPartitions, {n, {}},
                                      perturb(st_catalan(n))));
  }
}

void suite_narayana(Reports& out, std::optional<unsigned> n_min,
                    std::optional<unsigned> n_max) {
  auto ns = odd_of(clamp_range(range_vec(3, 9), n_min, n_max), 9);
  for (unsigned n : ns)
    for (unsigned k = 0; k + 1 <= n; ++k)
      out.push_back(
          verify_dihedral(Family::Narayana, {n, k}, st_narayana(n, k)));
  if (!ns.empty()) {
    unsigned n = ns.front();
    mark_control(out, verify_dihedral(Family::Narayana, {n, 1},
                                      perturb(st_narayana(n, 1))));
  }
}

void suite_triangulations(Reports& out, std::optional<unsigned> n_min,
                          std::optional<unsigned> n_max) {
  auto ns = clamp_range({5, 7, 9, 11}, n_min, n_max);
  for (unsigned n : ns) {
    out.push_back(verify_dihedral(Family::Triangulations, {n, {}},
                                  triangulation_sieving_poly(n, -1)));
    // The opposite sign convention is the per-size control: it must fail.
    mark_control(out, verify_dihedral(Family::Triangulations, {n, {}},
                                      triangulation_sieving_poly(n, 1)));
  }
}

void suite_example_families(Reports& out, std::optional<unsigned> n_min,
                            std::optional<unsigned> n_max) {
  for (unsigned n : clamp_range(range_vec(3, 10), n_min, n_max))
    for (unsigned k = 0; k <= 4; ++k)
      out.push_back(verify_cyclic(Family::Multisubsets, {n, k},
                                  q_binomial(n + k - 1, k)));
  for (unsigned n : clamp_range(range_vec(3, 10), n_min, n_max))
    for (unsigned k = 0; k <= n; ++k)
      out.push_back(verify_cyclic(Family::Subsets, {n, k}, q_binomial(n, k)));
  for (unsigned n : clamp_range(range_vec(3, 10), n_min, n_max))
    out.push_back(verify_cyclic(Family::NCPartitions, {n, {}}, q_catalan(n)));
  for (unsigned n : clamp_range(range_vec(3, 9), n_min, n_max))
    for (unsigned k = 0; k + 1 <= n; ++k)
      out.push_back(
          verify_cyclic(Family::Narayana, {n, k}, q_narayana(n, k)));
  for (unsigned n : clamp_range(range_vec(3, 10), n_min, n_max))
    out.push_back(
        verify_cyclic(Family::Triangulations, {n, {}}, q_catalan(n - 2)));
  for (unsigned n : clamp_range(range_vec(3, 9), n_min, n_max))
    for (unsigned k = 0; k + 3 <= n; ++k)
      out.push_back(
          verify_cyclic(Family::Dissections, {n, k}, q_kirkman(n, k)));
  auto ns = clamp_range(range_vec(3, 10), n_min, n_max);
  if (!ns.empty()) {
    unsigned n = ns.front();
    mark_control(out, verify_cyclic(Family::Subsets, {n, 1},
                                    perturb(q_binomial(n, 1))));
  }
}

void table1_for_n(Reports& out, unsigned n) {
  for (unsigned k = 0; k <= n; ++k)
    out.push_back(verify_table1(Family::Subsets, {n, k},
                                subsets_cells(n, k), false));
  for (unsigned k = 0; k <= 4; ++k)
    out.push_back(verify_table1(Family::Multisubsets, {n, k},
                                multisubsets_cells(n, k), false));
  out.push_back(
      verify_table1(Family::NCPartitions, {n, {}}, ncpartitions_cells(n),
                    false));
  for (unsigned k = 0; k + 1 <= n; ++k)
    out.push_back(verify_table1(Family::Narayana, {n, k},
                                narayana_cells(n, k), false));
  out.push_back(verify_table1(Family::Triangulations, {n, {}},
                              triangulations_cells(n), false));
}

void suite_table1_odd(Reports& out, std::optional<unsigned> n_min,
                      std::optional<unsigned> n_max) {
  auto ns = clamp_range({3, 5, 7, 9}, n_min, n_max);
  for (unsigned n : ns) table1_for_n(out, n);
  if (!ns.empty()) {
    unsigned n = ns.front();
    TableCells cells = subsets_cells(n, 1);
    cells.rotations = perturb(cells.rotations);
    cells.reflections = perturb(cells.reflections);
    mark_control(out, verify_table1(Family::Subsets, {n, 1}, cells, true));
  }
}

void suite_table1_even(Reports& out, std::optional<unsigned> n_min,
                       std::optional<unsigned> n_max) {
  auto ns = clamp_range({4, 6, 8}, n_min, n_max);
  for (unsigned n : ns) table1_for_n(out, n);
  // Controls: the vertex-reflection columns exactly as printed in the
  // source table, which disagree with the true fixed counts at (4, 2) and
  // (6, 2).
  for (unsigned n : ns) {
    if (n != 4 && n != 6) continue;
    out.push_back(verify_table1(Family::Subsets, {n, 2},
                                subsets_cells_as_printed(n, 2), true));
    out.push_back(verify_table1(Family::Multisubsets, {n, 2},
                                multisubsets_cells_as_printed(n, 2), true));
  }
  if (ns.empty()) return;
  if (std::none_of(out.begin(), out.end(),
                   [](const SievingReport& r) { return r.control; })) {
    unsigned n = ns.front();
    TableCells cells = subsets_cells(n, 1);
    cells.rotations = perturb(cells.rotations);
    mark_control(out, verify_table1(Family::Subsets, {n, 1}, cells, true));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "example-1.2",   "subsets",        "multisubsets",
      "ncpartitions",  "narayana",       "triangulations",
      "table-1-odd",   "table-1-even"};
  return names;
}

std::vector<SievingReport> verify_suite(const std::string& suite,
                                        std::optional<unsigned> n_min,
                                        std::optional<unsigned> n_max) {
  Reports out;
  if (suite == "example-1.2")
    suite_example_families(out, n_min, n_max);
  else if (suite == "subsets")
    suite_subsets(out, n_min, n_max);
  else if (suite == "multisubsets")
    suite_multisubsets(out, n_min, n_max);
  else if (suite == "ncpartitions")
    suite_ncpartitions(out, n_min, n_max);
  else if (suite == "narayana")
    suite_narayana(out, n_min, n_max);
  else if (suite == "triangulations")
    suite_triangulations(out, n_min, n_max);
  else if (suite == "table-1-odd")
    suite_table1_odd(out, n_min, n_max);
  else if (suite == "table-1-even")
    suite_table1_even(out, n_min, n_max);
  else
    throw ParameterMismatch("unknown suite: " + suite);
  return out;
}

bool suite_ok(const std::vector<SievingReport>& reports) {
  for (const auto& r : reports)
    if (!r.control && !r.pass) return false;
  return true;
}

nlohmann::ordered_json report_to_json(const SievingReport& report) {
  nlohmann::ordered_json j;
  j["kind"] = report.kind;
  j["family"] = report.family;
  j["n"] = report.n;
  if (report.k)
    j["k"] = *report.k;
  else
    j["k"] = nullptr;
  j["polynomial"] = report.polynomial;
  j["cell_polynomials"] = nlohmann::ordered_json::object();
  for (const auto& [key, text] : report.cell_polynomials)
    j["cell_polynomials"][key] = text;
  j["control"] = report.control;
  j["burnside_ok"] = report.burnside_ok;
  j["pass"] = report.pass;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json jr;
    jr["class"] = row.class_label;
    jr["size"] = row.size;
    jr["evaluation"] = row.evaluation;
    jr["fixed"] = row.fixed;
    jr["match"] = row.match;
    j["rows"].push_back(std::move(jr));
  }
  return j;
}

SievingReport report_from_json(const nlohmann::ordered_json& j) {
  SievingReport report;
  report.kind = j.at("kind").get<std::string>();
  report.family = j.at("family").get<std::string>();
  report.n = j.at("n").get<unsigned>();
  if (!j.at("k").is_null()) report.k = j.at("k").get<unsigned>();
  report.polynomial = j.at("polynomial").get<std::string>();
  for (const auto& [key, text] : j.at("cell_polynomials").items())
    report.cell_polynomials[key] = text.get<std::string>();
  report.control = j.at("control").get<bool>();
  report.burnside_ok = j.at("burnside_ok").get<bool>();
  report.pass = j.at("pass").get<bool>();
  for (const auto& jr : j.at("rows")) {
    ClassRecord row;
    row.class_label = jr.at("class").get<std::string>();
    row.size = jr.at("size").get<unsigned>();
    row.evaluation = jr.at("evaluation").get<std::string>();
    row.fixed = jr.at("fixed").get<long long>();
    row.match = jr.at("match").get<bool>();
    report.rows.push_back(std::move(row));
  }
  return report;
}

nlohmann::ordered_json reports_to_json(const std::vector<SievingReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr;
}

}  // namespace sievekit
