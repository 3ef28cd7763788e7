#include "sievekit/dihedral.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "sievekit/errors.hpp"

namespace sievekit {

namespace {

unsigned mod_n(long long v, unsigned n) {
  long long m = static_cast<long long>(n);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<unsigned>(r);
}

void require_n(unsigned n) {
  if (n < 3) throw Error("dihedral group requires n >= 3");
}

}  // namespace

DihedralElement dihedral_mul(unsigned n, const DihedralElement& a,
                             const DihedralElement& b) {
  require_n(n);
  long long A = a.index;
  long long B = b.index;
  if (!a.reflection && !b.reflection)
    return {false, mod_n(A + B, n)};
  if (!a.reflection && b.reflection)
    return {true, mod_n(B - A, n)};
  if (a.reflection && !b.reflection)
    return {true, mod_n(A + B, n)};
  return {false, mod_n(B - A, n)};
}

DihedralElement dihedral_inverse(unsigned n, const DihedralElement& a) {
  require_n(n);
  if (a.reflection) return a;
  return {false, mod_n(-static_cast<long long>(a.index), n)};
}

unsigned act_vertex(unsigned n, const DihedralElement& g, unsigned i) {
  require_n(n);
  if (i < 1 || i > n) throw Error("vertex label out of range");
  unsigned v = i - 1;  // 0-based
  unsigned image = g.reflection
                       ? mod_n(static_cast<long long>(n) - 1 -
                                   (static_cast<long long>(v) + g.index),
                               n)
                       : mod_n(static_cast<long long>(v) + g.index, n);
  return image + 1;
}

std::string element_name(const DihedralElement& g) {
  if (!g.reflection) {
    if (g.index == 0) return "e";
    return "r^" + std::to_string(g.index);
  }
  if (g.index == 0) return "s";
  return "s*r^" + std::to_string(g.index);
}

namespace {

std::vector<DihedralElement> all_elements(unsigned n) {
  std::vector<DihedralElement> out;
  out.reserve(2 * n);
  for (unsigned k = 0; k < n; ++k) out.push_back({false, k});
  for (unsigned k = 0; k < n; ++k) out.push_back({true, k});
  return out;
}

// Number of 1..n vertices fixed by g, from the group action itself.
int count_fixed_vertices(unsigned n, const DihedralElement& g) {
  int fixed = 0;
  for (unsigned i = 1; i <= n; ++i)
    if (act_vertex(n, g, i) == i) ++fixed;
  return fixed;
}

std::vector<ConjClass> compute_classes(unsigned n) {
  const auto elements = all_elements(n);
  std::vector<bool> seen(elements.size(), false);
  auto elem_pos = [&](const DihedralElement& g) {
    return (g.reflection ? n : 0u) + g.index;
  };

  std::vector<ConjClass> classes;
  for (const auto& g : elements) {
    if (seen[elem_pos(g)]) continue;
    ConjClass cls;
    for (const auto& h : elements) {
      DihedralElement conj = dihedral_mul(
          n, dihedral_mul(n, h, g), dihedral_inverse(n, h));
      if (!seen[elem_pos(conj)]) {
        seen[elem_pos(conj)] = true;
        cls.members.push_back(conj);
      }
    }
    std::sort(cls.members.begin(), cls.members.end(),
              [](const DihedralElement& a, const DihedralElement& b) {
                if (a.reflection != b.reflection) return !a.reflection;
                return a.index < b.index;
              });
    cls.representative = cls.members.front();
    cls.size = static_cast<unsigned>(cls.members.size());
    classes.push_back(std::move(cls));
  }

  for (auto& cls : classes) {
    const auto& rep = cls.representative;
    if (!rep.reflection) {
      unsigned l = std::min(rep.index, n - rep.index);
      cls.rotation_index = static_cast<int>(l);
      if (l == 0)
        cls.label = "identity";
      else if (n % 2 == 0 && l == n / 2)
        cls.label = "half-turn";
      else
        cls.label = "rotation-pair(" + std::to_string(l) + ")";
    } else {
      cls.fixed_vertices = count_fixed_vertices(n, rep);
      if (n % 2 == 1)
        cls.label = "reflections";
      else
        cls.label = rep.index % 2 == 0 ? "even-reflections"
                                       : "odd-reflections";
    }
  }

  std::sort(classes.begin(), classes.end(),
            [n](const ConjClass& a, const ConjClass& b) {
              auto key = [n](const ConjClass& c) {
                if (!c.representative.reflection)
                  return std::pair<int, int>(0, c.rotation_index);
                return std::pair<int, int>(
                    1, static_cast<int>(c.representative.index % 2));
              };
              return key(a) < key(b);
            });
  return classes;
}

std::mutex g_class_mutex;
std::map<unsigned, std::vector<ConjClass>> g_class_cache;

CycloInt int_val(unsigned n, long long v) {
  return CycloInt::from_integer(n, BigInt(v));
}

// xi^(m*l) + xi^(-m*l), the rotation trace of the 2-dimensional character.
CycloInt rotation_trace(unsigned n, long long m, long long l) {
  return CycloInt::root_power(n, m * l) + CycloInt::root_power(n, -m * l);
}

std::vector<CharVector> compute_irreducibles(unsigned n) {
  const auto& classes = conjugacy_classes(n);
  auto make = [&](const std::string& name,
                  const std::function<CycloInt(const ConjClass&)>& f) {
    CharVector chi;
    chi.n = n;
    chi.name = name;
    for (const auto& cls : classes) chi.values.push_back(f(cls));
    return chi;
  };

  std::vector<CharVector> out;
  out.push_back(make("triv", [&](const ConjClass&) { return int_val(n, 1); }));
  out.push_back(make("det", [&](const ConjClass& c) {
    return int_val(n, c.representative.reflection ? -1 : 1);
  }));
  if (n % 2 == 0) {
    // The two linear characters with r -> -1; on reflections the sign is +1
    // exactly when the axis passes through vertices (chi_b) or through edge
    // midpoints (chi_b_det).
    out.push_back(make("chi_b", [&](const ConjClass& c) {
      if (!c.representative.reflection)
        return int_val(n, c.rotation_index % 2 == 0 ? 1 : -1);
      return int_val(n, c.fixed_vertices > 0 ? 1 : -1);
    }));
    out.push_back(make("chi_b_det", [&](const ConjClass& c) {
      if (!c.representative.reflection)
        return int_val(n, c.rotation_index % 2 == 0 ? 1 : -1);
      return int_val(n, c.fixed_vertices > 0 ? -1 : 1);
    }));
  }
  for (unsigned m = 1; m <= (n - 1) / 2; ++m) {
    out.push_back(make("z_" + std::to_string(m), [&](const ConjClass& c) {
      if (c.representative.reflection) return CycloInt::zero(n);
      return rotation_trace(n, m, c.rotation_index);
    }));
  }
  return out;
}

std::mutex g_irr_mutex;
std::map<unsigned, std::vector<CharVector>> g_irr_cache;

}  // namespace

const std::vector<ConjClass>& conjugacy_classes(unsigned n) {
  require_n(n);
  std::lock_guard<std::mutex> lock(g_class_mutex);
  auto it = g_class_cache.find(n);
  if (it == g_class_cache.end())
    it = g_class_cache.emplace(n, compute_classes(n)).first;
  return it->second;
}

bool CharVector::all_integer() const {
  for (const auto& v : values)
    if (!v.is_rational()) return false;
  return true;
}

const std::vector<CharVector>& irreducible_characters(unsigned n) {
  require_n(n);
  conjugacy_classes(n);  // outside g_irr_mutex; avoids nested lock ordering
  std::lock_guard<std::mutex> lock(g_irr_mutex);
  auto it = g_irr_cache.find(n);
  if (it == g_irr_cache.end())
    it = g_irr_cache.emplace(n, compute_irreducibles(n)).first;
  return it->second;
}

std::pair<CycloInt, CycloInt> generator_values(unsigned n,
                                               const ConjClass& C) {
  require_n(n);
  if (n % 2 == 0)
    throw EvenNUnsupported(
        "sieving generator values are defined for odd n only");
  if (C.representative.reflection)
    return {CycloInt::zero(n), int_val(n, 1)};
  return {rotation_trace(n, 1, C.rotation_index), int_val(n, -1)};
}

namespace {

// The two-dimensional trace formula extended to every integer k, as a class
// function (not necessarily irreducible).
CharVector z_formal(unsigned n, long long k) {
  const auto& classes = conjugacy_classes(n);
  CharVector chi;
  chi.n = n;
  chi.name = "z_" + std::to_string(k);
  for (const auto& cls : classes) {
    if (cls.representative.reflection)
      chi.values.push_back(CycloInt::zero(n));
    else
      chi.values.push_back(rotation_trace(n, k, cls.rotation_index));
  }
  return chi;
}

bool same_values(const CharVector& a, const CharVector& b) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] != b.values[i]) return false;
  return true;
}

CharVector pointwise_mul(const CharVector& a, const CharVector& b) {
  CharVector out;
  out.n = a.n;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values.push_back(a.values[i] * b.values[i]);
  return out;
}

CharVector pointwise_sub(const CharVector& a, const CharVector& b) {
  CharVector out;
  out.n = a.n;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values.push_back(a.values[i] - b.values[i]);
  return out;
}

CharVector pointwise_add(const CharVector& a, const CharVector& b) {
  CharVector out;
  out.n = a.n;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values.push_back(a.values[i] + b.values[i]);
  return out;
}

}  // namespace

bool zk_recursion_check(unsigned n, unsigned kmax) {
  require_n(n);
  if (kmax > n) throw Error("zk_recursion_check requires kmax <= n");
  CharVector boundary =
      pointwise_add(irreducible_characters(n)[0], irreducible_characters(n)[1]);
  if (!same_values(z_formal(n, 0), boundary)) return false;
  if (!same_values(z_formal(n, n), boundary)) return false;
  for (unsigned k = 1; k + 1 <= kmax; ++k) {
    CharVector rhs = pointwise_sub(
        pointwise_mul(z_formal(n, k), z_formal(n, 1)), z_formal(n, k - 1));
    if (!same_values(z_formal(n, k + 1), rhs)) return false;
  }
  // The trace formula must also reproduce the tabulated irreducibles.
  for (const auto& chi : irreducible_characters(n)) {
    if (chi.name.rfind("z_", 0) != 0) continue;
    long long m = std::stoll(chi.name.substr(2));
    if (!same_values(chi, z_formal(n, m))) return false;
  }
  return true;
}

std::map<std::string, long long> decompose_character(unsigned n,
                                                     const CharVector& chi) {
  require_n(n);
  const auto& classes = conjugacy_classes(n);
  if (chi.values.size() != classes.size())
    throw Error("character vector length does not match class count");
  std::map<std::string, long long> out;
  const BigInt order = BigInt(2) * n;
  for (const auto& irr : irreducible_characters(n)) {
    CycloInt ip = CycloInt::zero(n);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      CycloInt term = chi.values[i] * irr.values[i].conj();
      term *= BigInt(classes[i].size);
      ip += term;
    }
    if (!ip.is_rational())
      throw NonIntegral("inner product with " + irr.name +
                        " is not a rational integer");
    BigInt total = ip.as_integer();
    if (total % order != 0)
      throw NonIntegral("inner product with " + irr.name +
                        " is not divisible by the group order");
    out[irr.name] = static_cast<long long>(total / order);
  }
  return out;
}

}  // namespace sievekit
