#include "sievekit/qtcat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "sievekit/cyclotomic.hpp"
#include "sievekit/dihedral.hpp"
#include "sievekit/errors.hpp"
#include "sievekit/orbits.hpp"
#include "sievekit/qanalog.hpp"

namespace sievekit {

namespace {

const std::vector<std::string> kQT = {"q", "t"};
const std::vector<std::string> kST = {"s", "t"};

unsigned choose2(unsigned m) { return m < 2 ? 0 : m * (m - 1) / 2; }

}  // namespace

std::vector<DyckPath> all_dyck_paths(unsigned n) {
  std::vector<DyckPath> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == n) {
      out.push_back({n, cur});
      return;
    }
    unsigned i = static_cast<unsigned>(cur.size());
    unsigned lo = std::max(i + 1, cur.empty() ? 1 : cur.back());
    for (unsigned v = lo; v <= n; ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  if (n == 0)
    out.push_back({0, {}});
  else
    rec(rec);
  return out;
}

unsigned area(const DyckPath& p) {
  unsigned total = 0;
  for (unsigned i = 0; i < p.rise_counts.size(); ++i)
    total += p.rise_counts[i] - (i + 1);
  return total;
}

unsigned bounce(const DyckPath& p) {
  unsigned total = 0;
  unsigned j = 0;
  while (j < p.n) {
    j = p.rise_counts[j];
    if (j < p.n) total += p.n - j;
  }
  return total;
}

namespace {

std::mutex g_qtcat_mutex;
std::map<unsigned, MultiPoly> g_qtcat_cache;

MultiPoly compute_qt_catalan(unsigned n) {
  MultiPoly out(kQT);
  for (const auto& path : all_dyck_paths(n))
    out.add_term({area(path), bounce(path)}, BigInt(1));
  return out;
}

}  // namespace

const MultiPoly& qt_catalan(unsigned n) {
  if (n > 10)
    throw ScaleExceeded("two-statistic polynomial supported for n <= 10");
  std::lock_guard<std::mutex> lock(g_qtcat_mutex);
  auto it = g_qtcat_cache.find(n);
  if (it == g_qtcat_cache.end())
    it = g_qtcat_cache.emplace(n, compute_qt_catalan(n)).first;
  return it->second;
}

std::vector<SchroderPath> all_schroder_paths(unsigned n, unsigned d) {
  if (d > n) throw ParameterMismatch("diagonal count d must satisfy d <= n");
  std::vector<SchroderPath> out;
  std::string cur;
  unsigned used_n = 0, used_e = 0, used_d = 0;
  auto rec = [&](auto&& self, unsigned x, unsigned y) -> void {
    if (cur.size() == 2 * (n - d) + d) {
      out.push_back({n, d, cur});
      return;
    }
    if (used_n < n - d) {
      ++used_n;
      cur.push_back('N');
      self(self, x, y + 1);
      cur.pop_back();
      --used_n;
    }
    if (used_e < n - d && y >= x + 1) {
      ++used_e;
      cur.push_back('E');
      self(self, x + 1, y);
      cur.pop_back();
      --used_e;
    }
    if (used_d < d) {
      ++used_d;
      cur.push_back('D');
      self(self, x + 1, y + 1);
      cur.pop_back();
      --used_d;
    }
  };
  rec(rec, 0, 0);
  return out;
}

unsigned area(const SchroderPath& p) {
  unsigned total = 0;
  unsigned x = 0, y = 0;
  for (char step : p.steps) {
    if (step == 'N') {
      ++y;
    } else if (step == 'E') {
      total += y - x - 1;
      ++x;
    } else {
      total += y - x;
      ++x;
      ++y;
    }
  }
  return total;
}

unsigned bounce(const SchroderPath& p) {
  // Row i (north or diagonal crossing) sits at level a_i = y - x taken at
  // the crossing step's start.  A pair i < j counts when the upper row j is
  // a north row and a_i - a_j is 0 or 1; with no diagonal steps this is the
  // standard pair companion of area, so the d = 0 polynomial is unchanged.
  std::vector<int> level;
  std::vector<bool> diagonal_row;
  int x = 0, y = 0;
  for (char step : p.steps) {
    if (step == 'N') {
      level.push_back(y - x);
      diagonal_row.push_back(false);
      ++y;
    } else if (step == 'E') {
      ++x;
    } else {
      level.push_back(y - x);
      diagonal_row.push_back(true);
      ++x;
      ++y;
    }
  }
  unsigned total = 0;
  for (std::size_t i = 0; i < level.size(); ++i)
    for (std::size_t j = i + 1; j < level.size(); ++j) {
      if (diagonal_row[j]) continue;
      const int diff = level[i] - level[j];
      if (diff == 0 || diff == 1) ++total;
    }
  return total;
}

namespace {

std::mutex g_qts_mutex;
std::map<std::pair<unsigned, unsigned>, MultiPoly> g_qts_cache;
std::map<std::pair<unsigned, unsigned>, MultiPoly> g_little_cache;

void require_schroder_range(unsigned n, unsigned d) {
  if (d > n) throw ParameterMismatch("diagonal count d must satisfy d <= n");
  if (n > 10)
    throw ScaleExceeded("diagonal-step polynomials supported for n <= 10");
}

}  // namespace

const MultiPoly& qt_schroder(unsigned n, unsigned d) {
  require_schroder_range(n, d);
  std::lock_guard<std::mutex> lock(g_qts_mutex);
  auto it = g_qts_cache.find({n, d});
  if (it == g_qts_cache.end()) {
    MultiPoly out(kQT);
    for (const auto& path : all_schroder_paths(n, d))
      out.add_term({area(path), bounce(path)}, BigInt(1));
    it = g_qts_cache.emplace(std::make_pair(n, d), std::move(out)).first;
  }
  return it->second;
}

const MultiPoly& little_qt_schroder(unsigned n, unsigned d) {
  require_schroder_range(n, d);
  {
    std::lock_guard<std::mutex> lock(g_qts_mutex);
    auto it = g_little_cache.find({n, d});
    if (it != g_little_cache.end()) return it->second;
  }
  MultiPoly out = qt_schroder(n, d);
  if (d > 0) out -= little_qt_schroder(n, d - 1);
  std::lock_guard<std::mutex> lock(g_qts_mutex);
  auto it = g_little_cache.find({n, d});
  if (it == g_little_cache.end())
    it = g_little_cache.emplace(std::make_pair(n, d), std::move(out)).first;
  return it->second;
}

bool schroder_slice_oracle(unsigned n, unsigned d) {
  const MultiPoly& S = qt_schroder(n, d);
  const long long offset =
      static_cast<long long>(choose2(n)) - static_cast<long long>(choose2(d));
  MultiPoly lhs({"q"});
  for (const auto& [exps, coeff] : S.terms()) {
    long long e = static_cast<long long>(exps[0]) -
                  static_cast<long long>(exps[1]) + offset;
    if (e < 0) return false;
    lhs.add_term({static_cast<unsigned>(e)}, coeff);
  }
  MultiPoly rhs = exact_div(q_multinomial(2 * n - d, {n - d, n - d, d}),
                            q_int(n - d + 1));
  return lhs == rhs;
}

namespace {

// (sign*t)^f * E(s, sign*t) over the variables (s, t).
MultiPoly candidate_poly(const MultiPoly& elementary_form, unsigned f,
                         int sign) {
  MultiPoly s_var = MultiPoly::variable(kST, "s");
  MultiPoly signed_t = MultiPoly::variable(kST, "t") * BigInt(sign);
  MultiPoly body = substitute(elementary_form,
                              {{"e1", s_var}, {"e2", signed_t}}, kST);
  return poly_pow(signed_t, f) * body;
}

std::mutex g_elem_mutex;
std::map<unsigned, MultiPoly> g_elem_cache;

const MultiPoly& elementary_qt_catalan(unsigned n) {
  std::lock_guard<std::mutex> lock(g_elem_mutex);
  auto it = g_elem_cache.find(n);
  if (it == g_elem_cache.end())
    it = g_elem_cache
             .emplace(n, to_elementary_basis(qt_catalan(n), "q", "t"))
             .first;
  return it->second;
}

}  // namespace

MultiPoly triangulation_sieving_poly(unsigned n, int sign) {
  if (n < 3) throw Error("polygon families require n >= 3");
  if (n % 2 == 0)
    throw EvenNUnsupported("sieving polynomial is defined for odd n only");
  if (sign != 1 && sign != -1)
    throw ParameterMismatch("sign must be +1 or -1");
  return candidate_poly(elementary_qt_catalan(n - 2), choose2(n - 2), sign);
}

ExploreReport explore_dissection_conjecture(unsigned n, unsigned k,
                                            unsigned f_min, unsigned f_max) {
  if (n % 2 == 0)
    throw EvenNUnsupported("dissection exploration is defined for odd n only");
  if (n < 5 || n > 11)
    throw ScaleExceeded("exploration supported for odd 5 <= n <= 11");
  if (k < 1 || k > n - 3)
    throw ParameterMismatch("diagonal count k must satisfy 1 <= k <= n - 3");
  if (f_min > f_max || f_max > 2 * n * n)
    throw ParameterMismatch("exponent range must satisfy f <= 2n^2");

  ExploreReport report;
  report.n = n;
  report.k = k;
  report.f_min = f_min;
  report.f_max = f_max;

  const MultiPoly& base = little_qt_schroder(n - 2, (n - 3) - k);
  report.base = to_canonical_string(base);
  report.symmetric = is_symmetric(base, "q", "t");
  if (!report.symmetric) return report;
  MultiPoly elementary = to_elementary_basis(base, "q", "t");

  const auto& classes = conjugacy_classes(n);
  std::vector<long long> fixed_counts;
  for (const auto& cls : classes)
    fixed_counts.push_back(
        fixed_points(Family::Dissections, {n, k}, cls));

  for (int sign : {1, -1}) {
    // Body value and the scaling base sign*t per class; the candidate value
    // at exponent f is (sign*t_val)^f * body_val.
    MultiPoly body = substitute(
        elementary,
        {{"e1", MultiPoly::variable(kST, "s")},
         {"e2", MultiPoly::variable(kST, "t") * BigInt(sign)}},
        kST);
    std::vector<CycloInt> body_vals, scale_vals, scale_pows;
    for (const auto& cls : classes) {
      auto [s_val, t_val] = generator_values(n, cls);
      body_vals.push_back(eval_bivariate_at_class(body, s_val, t_val));
      CycloInt scale = t_val * BigInt(sign);
      scale_vals.push_back(scale);
      scale_pows.push_back(scale.pow(f_min));
    }
    for (unsigned f = f_min; f <= f_max; ++f) {
      ExploreCandidate cand;
      cand.f = f;
      cand.sign = sign;
      cand.all_match = true;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        ExploreRow row;
        row.class_label = classes[i].label;
        row.fixed = fixed_counts[i];
        CycloInt value = scale_pows[i] * body_vals[i];
        if (value.is_rational()) {
          row.value = value.as_integer().str();
          row.match = value.as_integer() == BigInt(row.fixed);
        } else {
          row.value = value.to_string();
          row.match = false;
        }
        cand.all_match = cand.all_match && row.match;
        cand.per_class.push_back(std::move(row));
        scale_pows[i] *= scale_vals[i];
      }
      if (cand.all_match) report.matching.emplace_back(f, sign);
      report.candidates.push_back(std::move(cand));
    }
  }
  // Candidates were generated sign-major; reorder to f-major with +1 first.
  std::stable_sort(report.candidates.begin(), report.candidates.end(),
                   [](const ExploreCandidate& a, const ExploreCandidate& b) {
                     if (a.f != b.f) return a.f < b.f;
                     return a.sign > b.sign;
                   });
  std::stable_sort(report.matching.begin(), report.matching.end(),
                   [](const std::pair<unsigned, int>& a,
                      const std::pair<unsigned, int>& b) {
                     if (a.first != b.first) return a.first < b.first;
                     return a.second > b.second;
                   });
  return report;
}

nlohmann::ordered_json explore_report_to_json(const ExploreReport& report) {
  nlohmann::ordered_json j;
  j["family"] = report.family;
  j["n"] = report.n;
  j["k"] = report.k;
  j["f_min"] = report.f_min;
  j["f_max"] = report.f_max;
  j["symmetry"] = report.symmetric;
  j["base"] = report.base;
  j["candidates"] = nlohmann::ordered_json::array();
  for (const auto& cand : report.candidates) {
    nlohmann::ordered_json jc;
    jc["f"] = cand.f;
    jc["sign"] = cand.sign;
    jc["all_match"] = cand.all_match;
    jc["per_class"] = nlohmann::ordered_json::array();
    for (const auto& row : cand.per_class) {
      nlohmann::ordered_json jr;
      jr["class"] = row.class_label;
      jr["fixed"] = row.fixed;
      jr["value"] = row.value;
      jr["match"] = row.match;
      jc["per_class"].push_back(std::move(jr));
    }
    j["candidates"].push_back(std::move(jc));
  }
  j["matching"] = nlohmann::ordered_json::array();
  for (const auto& [f, sign] : report.matching)
    j["matching"].push_back(nlohmann::ordered_json{{"f", f}, {"sign", sign}});
  return j;
}

std::string explore_report_to_string(const ExploreReport& report) {
  return explore_report_to_json(report).dump(2) + "\n";
}

}  // namespace sievekit
