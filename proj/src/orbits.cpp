#include "sievekit/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <tuple>

#include "sievekit/errors.hpp"
#include "sievekit/threads.hpp"

namespace sievekit {

Family family_from_string(const std::string& name) {
  if (name == "subsets") return Family::Subsets;
  if (name == "multisubsets") return Family::Multisubsets;
  if (name == "ncpartitions") return Family::NCPartitions;
  if (name == "narayana") return Family::Narayana;
  if (name == "triangulations") return Family::Triangulations;
  if (name == "dissections") return Family::Dissections;
  throw ParameterMismatch("unknown family: " + name);
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::Subsets: return "subsets";
    case Family::Multisubsets: return "multisubsets";
    case Family::NCPartitions: return "ncpartitions";
    case Family::Narayana: return "narayana";
    case Family::Triangulations: return "triangulations";
    case Family::Dissections: return "dissections";
  }
  throw ParameterMismatch("unknown family enumerator");
}

bool CombObject::operator<(const CombObject& rhs) const {
  return std::tie(family, n, data) < std::tie(rhs.family, rhs.n, rhs.data);
}

namespace {

bool needs_k(Family f) {
  return f == Family::Subsets || f == Family::Multisubsets ||
         f == Family::Narayana || f == Family::Dissections;
}

void validate_params(Family f, const FamilyParams& p) {
  if (p.n < 1) throw ParameterMismatch("n must be positive");
  if (needs_k(f) != p.k.has_value())
    throw ParameterMismatch("family " + family_to_string(f) +
                            (needs_k(f) ? " requires k" : " takes no k"));
  switch (f) {
    case Family::Subsets:
      if (p.n > 12) throw ScaleExceeded("subsets supported for n <= 12");
      if (*p.k > p.n) throw ParameterMismatch("subsets require k <= n");
      break;
    case Family::Multisubsets:
      if (p.n > 12 || *p.k > 8)
        throw ScaleExceeded("multisubsets supported for n <= 12, k <= 8");
      break;
    case Family::NCPartitions:
      if (p.n > 11)
        throw ScaleExceeded("noncrossing partitions supported for n <= 11");
      break;
    case Family::Narayana:
      if (p.n > 11)
        throw ScaleExceeded("block-counted partitions supported for n <= 11");
      if (*p.k >= p.n)
        throw ParameterMismatch("block-counted partitions require k < n");
      break;
    case Family::Triangulations:
      if (p.n < 3) throw ParameterMismatch("polygon families require n >= 3");
      if (p.n > 11)
        throw ScaleExceeded("triangulations supported for n <= 11");
      break;
    case Family::Dissections:
      if (p.n < 3) throw ParameterMismatch("polygon families require n >= 3");
      if (p.n > 11) throw ScaleExceeded("dissections supported for n <= 11");
      if (*p.k > p.n - 3)
        throw ParameterMismatch("dissections require k <= n - 3");
      break;
  }
}

std::vector<std::vector<int>> k_subsets(unsigned n, unsigned k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= static_cast<int>(n); ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<std::vector<int>> k_multisubsets(unsigned n, unsigned k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= static_cast<int>(n); ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Backtracking over elements 1..n: each element starts a new block or joins
// an existing one.  Joining the block with maximum m draws the arc (m, i);
// the partition stays noncrossing iff no existing arc (a, b) has a < m < b,
// and checking that incrementally is complete because in any crossing pair
// the arc closed later would have been rejected here.
std::vector<std::vector<std::vector<int>>> noncrossing_partitions(unsigned n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  std::vector<std::pair<int, int>> arcs;
  auto rec = [&](auto&& self, int i) -> void {
    if (i > static_cast<int>(n)) {
      auto sorted = blocks;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    // Index loop: the recursive call grows and shrinks `blocks`, so
    // iterators into it do not survive the call.
    const std::size_t nblocks = blocks.size();
    for (std::size_t bi = 0; bi < nblocks; ++bi) {
      int m = blocks[bi].back();
      bool crossed = false;
      for (const auto& [a, b] : arcs)
        if (a < m && m < b) {
          crossed = true;
          break;
        }
      if (crossed) continue;
      blocks[bi].push_back(i);
      arcs.emplace_back(m, i);
      self(self, i + 1);
      arcs.pop_back();
      blocks[bi].pop_back();
    }
    blocks.push_back({i});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 1);
  return out;
}

// Triangulations of the sub-polygon on contiguous vertices lo..hi, reported
// as diagonal lists.  The closing edge (lo, hi) itself is never emitted, so
// at the top level only genuine diagonals of the n-gon appear.
std::vector<std::vector<std::vector<int>>> triangulate_range(int lo, int hi) {
  std::vector<std::vector<std::vector<int>>> out;
  if (hi - lo + 1 < 3) {
    out.push_back({});
    return out;
  }
  for (int apex = lo + 1; apex < hi; ++apex) {
    auto left = triangulate_range(lo, apex);
    auto right = triangulate_range(apex, hi);
    for (const auto& l : left)
      for (const auto& r : right) {
        std::vector<std::vector<int>> diags = l;
        diags.insert(diags.end(), r.begin(), r.end());
        if (apex > lo + 1) diags.push_back({lo, apex});
        if (hi > apex + 1) diags.push_back({apex, hi});
        std::sort(diags.begin(), diags.end());
        out.push_back(std::move(diags));
      }
  }
  return out;
}

bool diagonals_cross(const std::vector<int>& d1, const std::vector<int>& d2) {
  int a = d1[0], b = d1[1], c = d2[0], d = d2[1];
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::vector<std::vector<int>> all_diagonals(unsigned n) {
  std::vector<std::vector<int>> out;
  for (int a = 1; a <= static_cast<int>(n); ++a)
    for (int b = a + 2; b <= static_cast<int>(n); ++b) {
      if (a == 1 && b == static_cast<int>(n)) continue;
      out.push_back({a, b});
    }
  return out;
}

std::vector<std::vector<std::vector<int>>> dissections(unsigned n,
                                                       unsigned k) {
  const auto diags = all_diagonals(n);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = next; i < diags.size(); ++i) {
      bool ok = true;
      for (const auto& d : cur)
        if (diagonals_cross(d, diags[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(diags[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<CombObject> build_family(Family f, const FamilyParams& p) {
  std::vector<std::vector<std::vector<int>>> raw;
  switch (f) {
    case Family::Subsets:
      for (auto& s : k_subsets(p.n, *p.k)) raw.push_back({std::move(s)});
      break;
    case Family::Multisubsets:
      for (auto& s : k_multisubsets(p.n, *p.k)) raw.push_back({std::move(s)});
      break;
    case Family::NCPartitions:
      raw = noncrossing_partitions(p.n);
      break;
    case Family::Narayana: {
      const unsigned blocks = p.n - *p.k;
      for (auto& part : noncrossing_partitions(p.n))
        if (part.size() == blocks) raw.push_back(std::move(part));
      break;
    }
    case Family::Triangulations:
      raw = triangulate_range(1, static_cast<int>(p.n));
      break;
    case Family::Dissections:
      raw = dissections(p.n, *p.k);
      break;
  }
  std::vector<CombObject> out;
  out.reserve(raw.size());
  for (auto& data : raw) out.push_back({f, p.n, std::move(data)});
  std::sort(out.begin(), out.end());
  return out;
}

std::mutex g_family_mutex;
std::map<std::tuple<int, unsigned, long long>, std::vector<CombObject>>
    g_family_cache;

}  // namespace

const std::vector<CombObject>& enumerate(Family f, const FamilyParams& p) {
  validate_params(f, p);
  const auto key = std::make_tuple(static_cast<int>(f), p.n,
                                   p.k ? static_cast<long long>(*p.k) : -1);
  std::lock_guard<std::mutex> lock(g_family_mutex);
  auto it = g_family_cache.find(key);
  if (it == g_family_cache.end())
    it = g_family_cache.emplace(key, build_family(f, p)).first;
  return it->second;
}

CombObject act(const DihedralElement& g, const CombObject& x, unsigned n) {
  if (x.n != n)
    throw ParameterMismatch("object was built over a different vertex count");
  CombObject out;
  out.family = x.family;
  out.n = n;
  out.data.reserve(x.data.size());
  for (const auto& block : x.data) {
    std::vector<int> image;
    image.reserve(block.size());
    for (int v : block)
      image.push_back(
          static_cast<int>(act_vertex(n, g, static_cast<unsigned>(v))));
    std::sort(image.begin(), image.end());
    out.data.push_back(std::move(image));
  }
  std::sort(out.data.begin(), out.data.end());
  return out;
}

long long fixed_points_of_element(Family f, const FamilyParams& p,
                                  const DihedralElement& g) {
  const auto& objects = enumerate(f, p);
  std::atomic<long long> total{0};
  parallel_blocks(objects.size(), [&](std::size_t lo, std::size_t hi) {
    long long local = 0;
    for (std::size_t i = lo; i < hi; ++i)
      if (act(g, objects[i], p.n) == objects[i]) ++local;
    total += local;
  });
  return total.load();
}

long long fixed_points(Family f, const FamilyParams& p, const ConjClass& C) {
  long long common = -1;
  for (const auto& g : C.members) {
    long long count = fixed_points_of_element(f, p, g);
    if (common == -1)
      common = count;
    else if (count != common)
      throw Error("fixed-point count varies inside conjugacy class " +
                  C.label);
  }
  return common;
}

CharVector permutation_character(Family f, const FamilyParams& p) {
  const auto& classes = conjugacy_classes(p.n);
  CharVector chi;
  chi.n = p.n;
  chi.name = family_to_string(f);
  if (p.k) chi.name += "(k=" + std::to_string(*p.k) + ")";
  for (const auto& cls : classes)
    chi.values.push_back(
        CycloInt::from_integer(p.n, BigInt(fixed_points(f, p, cls))));
  return chi;
}

}  // namespace sievekit
