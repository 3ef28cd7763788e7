// Acceptance gate: runs every advertised guarantee end to end and prints one
// PASS/FAIL line per criterion, with wall-clock budgets enforced.  The first
// argument names the golden-file directory used to pin explorer output.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sievekit/cyclotomic.hpp"
#include "sievekit/dihedral.hpp"
#include "sievekit/fibonomial.hpp"
#include "sievekit/orbits.hpp"
#include "sievekit/polyring.hpp"
#include "sievekit/qanalog.hpp"
#include "sievekit/qtcat.hpp"
#include "sievekit/sievecheck.hpp"

using namespace sievekit;
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kQ{"q"};
const std::vector<std::string> kST{"s", "t"};
const std::vector<std::string> kAB{"a", "b"};

std::map<std::string, std::vector<SievingReport>> g_suite_cache;

const std::vector<SievingReport>& run_suite(const std::string& name) {
  auto it = g_suite_cache.find(name);
  if (it == g_suite_cache.end())
    it = g_suite_cache.emplace(name, verify_suite(name, {}, {})).first;
  return it->second;
}

struct SuiteTally {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::size_t controls = 0;
  std::size_t controls_passed = 0;  // controls are expected to fail
};

SuiteTally tally(const std::vector<SievingReport>& reports) {
  SuiteTally t;
  for (const auto& r : reports) {
    if (r.control) {
      ++t.controls;
      if (r.pass) ++t.controls_passed;
    } else {
      ++t.checks;
      if (!r.pass) ++t.failed;
    }
  }
  return t;
}

// Runs one criterion, enforcing its wall-clock budget, and prints exactly
// one result line.
bool run_criterion(int id, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note += std::string(note.empty() ? "" : "; ") + "exception: " + e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (budget_seconds > 0 && elapsed > budget_seconds) {
    ok = false;
    note += note.empty() ? "" : "; ";
    note += "over budget";
  }
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion-" << id << " " << note << " ["
       << std::fixed;
  line.precision(1);
  line << elapsed << "s";
  if (budget_seconds > 0) line << " of " << budget_seconds << "s budget";
  line << "]";
  std::cout << line.str() << std::endl;
  return ok;
}

// Shifts every q^a t^b to q^(a - b + offset); fails if any exponent drops
// below zero.
bool q_inverse_slice_equals(const MultiPoly& p, unsigned offset,
                            const MultiPoly& expected) {
  MultiPoly out(kQ);
  for (const auto& [e, c] : p.terms()) {
    long long shifted =
        static_cast<long long>(e[0]) - static_cast<long long>(e[1]) + offset;
    if (shifted < 0) return false;
    out.add_term({static_cast<unsigned>(shifted)}, c);
  }
  return out == expected;
}

MultiPoly with_t_set_to_one(const MultiPoly& p) {
  return substitute(p,
                    {{"q", MultiPoly::variable(kQ, "q")},
                     {"t", MultiPoly::constant(kQ, BigInt(1))}},
                    kQ);
}

std::vector<std::vector<unsigned>> partitions_of(unsigned total) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, total, total);
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- criterion bodies ----

bool criterion_table(std::string& note) {
  const auto& odd = run_suite("table-1-odd");
  const auto& even = run_suite("table-1-even");
  SuiteTally t_odd = tally(odd);
  SuiteTally t_even = tally(even);
  bool ok = suite_ok(odd) && suite_ok(even) && t_odd.failed == 0 &&
            t_even.failed == 0;
  // The corrected even-n vertex columns must disagree with the rejected
  // printed variants: all four printed controls fail.
  ok = ok && t_even.controls >= 4 && t_even.controls_passed == 0 &&
       t_odd.controls >= 1 && t_odd.controls_passed == 0;
  std::ostringstream ss;
  ss << "table suites: " << t_odd.checks << " odd + " << t_even.checks
     << " even cell checks pass, "
     << (t_odd.controls + t_even.controls - t_odd.controls_passed -
         t_even.controls_passed)
     << " controls fail as designed";
  note = ss.str();
  return ok;
}

bool criterion_cyclic(std::string& note) {
  const auto& reports = run_suite("example-1.2");
  SuiteTally t = tally(reports);
  bool ok = suite_ok(reports) && t.failed == 0 && t.controls >= 1 &&
            t.controls_passed == 0;
  std::ostringstream ss;
  ss << "root-of-unity checks for all six families: " << t.checks
     << " grids pass";
  note = ss.str();
  return ok;
}

bool criterion_dihedral(std::string& note) {
  bool ok = true;
  std::size_t checks = 0;
  for (const char* name :
       {"subsets", "multisubsets", "ncpartitions", "narayana"}) {
    const auto& reports = run_suite(name);
    SuiteTally t = tally(reports);
    ok = ok && suite_ok(reports) && t.failed == 0 && t.controls >= 1 &&
         t.controls_passed == 0;
    checks += t.checks;
  }
  // Triangulations: the negated-second-variable convention passes and the
  // plain one fails, for every listed polygon size.
  const auto& tri = run_suite("triangulations");
  std::map<unsigned, std::pair<bool, bool>> seen;  // n -> (pass-, fail+)
  for (const auto& r : tri) {
    if (r.control)
      seen[r.n].second = !r.pass;
    else
      seen[r.n].first = r.pass;
  }
  for (unsigned n : {5u, 7u, 9u, 11u}) {
    auto it = seen.find(n);
    ok = ok && it != seen.end() && it->second.first && it->second.second;
  }
  checks += tally(tri).checks;
  std::ostringstream ss;
  ss << "generator-pair checks pass for " << checks
     << " grids; exactly one sign convention survives per polygon";
  note = ss.str();
  return ok;
}

bool criterion_identities(std::string& note) {
  bool ok = true;
  for (unsigned n = 1; n <= 8; ++n) {
    ok = ok && q_inverse_slice_equals(qt_catalan(n), n * (n - 1) / 2,
                                      q_catalan(n));
    ok = ok && with_t_set_to_one(qt_catalan(n)) == carlitz_riordan(n);
  }
  for (unsigned n = 2; n <= 12; n += 2)
    ok = ok && eval_at_root(carlitz_riordan(n), 2, 1).as_integer() == 0;
  for (unsigned k = 1; k <= 6; ++k) {
    unsigned n = 2 * k - 1;
    BigInt value = eval_at_root(carlitz_riordan(n), 2, 1).as_integer();
    if ((n * (n - 1) / 2) % 2 == 1) value = -value;
    ok = ok && value == big_catalan(k - 1);
  }
  for (unsigned total = 1; total <= 5; ++total)
    for (const auto& parts : partitions_of(total)) {
      Partition lam(parts);
      for (unsigned n = 1; n <= 7; ++n) {
        MultiPoly geom = schur_geometric_oracle(lam, n);
        if (lam.num_parts() > n) {
          ok = ok && geom.is_zero();
          continue;
        }
        MultiPoly alg =
            substitute(hook_content_product(lam, n),
                       {{"s", MultiPoly::variable(kAB, "a") +
                                  MultiPoly::variable(kAB, "b")},
                        {"t", MultiPoly::variable(kAB, "a") *
                                  MultiPoly::variable(kAB, "b") * BigInt(-1)}},
                       kAB);
        ok = ok && alg == geom;
      }
    }
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k)
      ok = ok && has_nonnegative_coefficients(fibonomial(n, k));
  for (unsigned n = 2; n <= 9; ++n)
    for (unsigned k = 0; k + 1 <= n; ++k)
      ok = ok && narayana_identity_check(n, k);
  for (unsigned n = 3; n <= 9; n += 2) ok = ok && zk_recursion_check(n, n);
  note =
      "slice, diagonal, alternating-sign, tableau, positivity, refinement "
      "and trace-recursion identities all hold";
  return ok;
}

bool criterion_slice(std::string& note) {
  bool ok = true;
  std::size_t count = 0;
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned d = 0; d <= n; ++d) {
      ok = ok && schroder_slice_oracle(n, d);
      ++count;
    }
  std::ostringstream ss;
  ss << "one-variable specialization matches on all " << count
     << " diagonal-step grids";
  note = ss.str();
  return ok;
}

bool criterion_explorer(const fs::path& golden_dir, std::string& note) {
  bool ok = true;
  std::size_t symmetric = 0, total = 0;
  for (unsigned n = 1; n <= 7; ++n)
    for (unsigned d = 0; d <= n; ++d) {
      ++total;
      if (is_symmetric(little_qt_schroder(n, d), "q", "t")) ++symmetric;
    }
  // Current data: every refined polynomial in range is symmetric.
  ok = ok && symmetric == total;

  fs::path dir = golden_dir / "explore";
  fs::create_directories(dir);
  std::size_t pinned = 0, compared = 0;
  for (unsigned n : {5u, 7u}) {
    for (unsigned k : {1u, n - 3}) {
      ExploreReport report =
          explore_dissection_conjecture(n, k, 0, 2 * n * n);
      std::string text = explore_report_to_string(report);
      std::string again = explore_report_to_string(
          explore_dissection_conjecture(n, k, 0, 2 * n * n));
      ok = ok && text == again;  // deterministic across runs
      if (k == n - 3) {
        // Must recover the triangulation result: exponent C(n-2, 2) with
        // the negated second variable.
        std::pair<unsigned, int> expected{(n - 2) * (n - 3) / 2, -1};
        bool found = false;
        for (const auto& m : report.matching) found = found || m == expected;
        ok = ok && found;
      }
      fs::path file =
          dir / ("explore-n" + std::to_string(n) + "-k" + std::to_string(k) +
                 ".json");
      if (fs::exists(file)) {
        ok = ok && read_file(file) == text;
        ++compared;
      } else {
        std::ofstream out(file, std::ios::binary);
        out << text;
        ++pinned;
      }
    }
  }
  std::ostringstream ss;
  ss << "symmetry verdicts " << symmetric << "/" << total
     << "; explorer deterministic, " << compared << " golden compared, "
     << pinned << " pinned, triangulation candidate recovered";
  note = ss.str();
  return ok;
}

bool criterion_controls(std::string& note) {
  bool ok = true;
  for (const auto& name : suite_names()) {
    const auto& reports = run_suite(name);
    bool failing_control = false;
    for (const auto& r : reports)
      if (r.control && !r.pass) failing_control = true;
    ok = ok && failing_control;
  }
  bool rejected = false;
  try {
    verify_dihedral(Family::Subsets, {4, 2}, fibonomial(4, 2));
  } catch (const EvenNUnsupported&) {
    rejected = true;
  }
  ok = ok && rejected;
  rejected = false;
  try {
    generator_values(4, conjugacy_classes(4).front());
  } catch (const EvenNUnsupported&) {
    rejected = true;
  }
  ok = ok && rejected;
  note =
      "every suite carries a failing control; even-size generator-pair "
      "requests are rejected";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <golden-dir>" << std::endl;
    return 2;
  }
  fs::path golden_dir(argv[1]);
  bool all = true;
  all &= run_criterion(1, 120, criterion_table);
  all &= run_criterion(2, 120, criterion_cyclic);
  all &= run_criterion(3, 300, criterion_dihedral);
  all &= run_criterion(4, 180, criterion_identities);
  all &= run_criterion(5, 120, criterion_slice);
  all &= run_criterion(6, 300, [&](std::string& note) {
    return criterion_explorer(golden_dir, note);
  });
  all &= run_criterion(7, 0, criterion_controls);
  std::cout << (all ? "acceptance: all criteria pass"
                    : "acceptance: FAILURES present")
            << std::endl;
  return all ? 0 : 1;
}
