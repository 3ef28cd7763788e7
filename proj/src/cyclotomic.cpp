#include "sievekit/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace sievekit {

namespace {

// Dense univariate polynomials over BigInt, index = degree.
using Dense = std::vector<BigInt>;

void dense_trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Quotient of an exact division by a monic divisor.
Dense dense_div_monic(Dense num, const Dense& den) {
  Dense q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0,
          BigInt(0));
  while (true) {
    dense_trim(num);
    if (num.size() < den.size()) break;
    const std::size_t shift = num.size() - den.size();
    const BigInt c = num.back();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[shift + i] -= c * den[i];
  }
  return q;
}

// Remainder modulo a monic divisor.
Dense dense_mod_monic(Dense num, const Dense& den) {
  while (true) {
    dense_trim(num);
    if (num.size() < den.size()) break;
    const std::size_t shift = num.size() - den.size();
    const BigInt c = num.back();
    for (std::size_t i = 0; i < den.size(); ++i)
      num[shift + i] -= c * den[i];
  }
  return num;
}

struct Context {
  unsigned n = 0;
  unsigned phi = 0;
  Dense phi_poly;                  // Phi_n, monic, degree phi
  std::vector<Dense> root_powers;  // q^j mod Phi_n for 0 <= j < n, padded
};

std::mutex g_mutex;
std::map<unsigned, Dense> g_phi_cache;        // Phi_m dense
std::map<unsigned, Context> g_context_cache;

// Computes (and caches) Phi_m for all m <= n via
// Phi_m = (q^m - 1) / prod_{d | m, d < m} Phi_d.  Caller holds the lock.
const Dense& phi_dense_locked(unsigned n) {
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;
  for (unsigned m = 1; m <= n; ++m) {
    if (g_phi_cache.count(m)) continue;
    Dense num(m + 1, BigInt(0));
    num[0] = -1;
    num[m] = 1;
    Dense den{BigInt(1)};
    for (unsigned d = 1; d < m; ++d)
      if (m % d == 0) den = dense_mul(den, g_phi_cache.at(d));
    g_phi_cache.emplace(m, dense_div_monic(std::move(num), den));
  }
  return g_phi_cache.at(n);
}

const Context& context(unsigned n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_context_cache.find(n);
  if (it != g_context_cache.end()) return it->second;
  if (n == 0) throw Error("cyclotomic conductor must be positive");
  Context ctx;
  ctx.n = n;
  ctx.phi_poly = phi_dense_locked(n);
  ctx.phi = static_cast<unsigned>(ctx.phi_poly.size() - 1);
  ctx.root_powers.resize(n);
  for (unsigned j = 0; j < n; ++j) {
    Dense qj(j + 1, BigInt(0));
    qj[j] = 1;
    Dense r = dense_mod_monic(std::move(qj), ctx.phi_poly);
    r.resize(ctx.phi, BigInt(0));
    ctx.root_powers[j] = std::move(r);
  }
  return g_context_cache.emplace(n, std::move(ctx)).first->second;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

CycloInt CycloInt::zero(unsigned n) {
  const Context& ctx = context(n);
  return CycloInt(n, std::vector<BigInt>(ctx.phi, BigInt(0)));
}

CycloInt CycloInt::from_integer(unsigned n, const BigInt& v) {
  CycloInt r = zero(n);
  if (!r.c_.empty()) r.c_[0] = v;
  else if (v != 0) throw Error("conductor 1 residue ring is trivial");
  return r;
}

CycloInt CycloInt::root_power(unsigned n, long long e) {
  const Context& ctx = context(n);
  long long j = e % static_cast<long long>(n);
  if (j < 0) j += n;
  return CycloInt(n, ctx.root_powers[static_cast<unsigned>(j)]);
}

void CycloInt::check_conductor(const CycloInt& rhs) const {
  if (n_ != rhs.n_)
    throw ConductorMismatch("cyclotomic conductors differ: " +
                            std::to_string(n_) + " vs " +
                            std::to_string(rhs.n_));
}

CycloInt CycloInt::operator-() const {
  CycloInt r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycloInt& CycloInt::operator+=(const CycloInt& rhs) {
  check_conductor(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& rhs) {
  check_conductor(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

CycloInt& CycloInt::operator*=(const CycloInt& rhs) {
  check_conductor(rhs);
  const Context& ctx = context(n_);
  Dense prod = dense_mul(c_, rhs.c_);
  dense_trim(prod);
  Dense r = dense_mod_monic(std::move(prod), ctx.phi_poly);
  r.resize(ctx.phi, BigInt(0));
  c_ = std::move(r);
  return *this;
}

CycloInt& CycloInt::operator*=(const BigInt& c) {
  for (auto& coef : c_) coef *= c;
  return *this;
}

bool CycloInt::operator==(const CycloInt& rhs) const {
  return n_ == rhs.n_ && c_ == rhs.c_;
}

CycloInt CycloInt::conj() const {
  CycloInt out = zero(n_);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    CycloInt basis = root_power(n_, -static_cast<long long>(j));
    for (std::size_t i = 0; i < out.c_.size(); ++i)
      out.c_[i] += c_[j] * basis.c_[i];
  }
  return out;
}

bool CycloInt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

BigInt CycloInt::as_integer() const {
  if (!is_rational())
    throw NotRational("cyclotomic value is not a rational integer: " +
                      to_string());
  return c_.empty() ? BigInt(0) : c_[0];
}

CycloInt CycloInt::pow(unsigned e) const {
  CycloInt r = from_integer(n_, 1);
  CycloInt base = *this;
  while (e) {
    if (e & 1) r *= base;
    if (e >>= 1) base *= base;
  }
  return r;
}

std::string CycloInt::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].str();
  }
  os << "] (mod Phi_" << n_ << ")";
  return os.str();
}

MultiPoly cyclotomic_poly(unsigned n) {
  const Context& ctx = context(n);
  MultiPoly p({"q"});
  for (std::size_t i = 0; i < ctx.phi_poly.size(); ++i)
    p.add_term({static_cast<unsigned>(i)}, ctx.phi_poly[i]);
  return p;
}

CycloInt eval_at_root(const MultiPoly& p, unsigned n, long long l) {
  if (p.vars().size() != 1)
    throw Error("eval_at_root expects a univariate polynomial");
  CycloInt total = CycloInt::zero(n);
  for (const auto& [e, c] : p.terms()) {
    const long long exponent =
        static_cast<long long>(e[0]) * l % static_cast<long long>(n);
    total += CycloInt::root_power(n, exponent) * c;
  }
  return total;
}

CycloInt eval_bivariate_at_class(const MultiPoly& p, const CycloInt& s_val,
                                 const CycloInt& t_val) {
  if (p.vars().size() != 2)
    throw Error("eval_bivariate_at_class expects a bivariate polynomial");
  if (s_val.conductor() != t_val.conductor())
    throw ConductorMismatch("generator values have different conductors");
  const unsigned n = s_val.conductor();
  unsigned max_a = 0, max_b = 0;
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    max_a = std::max(max_a, e[0]);
    max_b = std::max(max_b, e[1]);
  }
  std::vector<CycloInt> pow_s(max_a + 1, CycloInt::from_integer(n, 1));
  for (unsigned i = 1; i <= max_a; ++i) pow_s[i] = pow_s[i - 1] * s_val;
  std::vector<CycloInt> pow_t(max_b + 1, CycloInt::from_integer(n, 1));
  for (unsigned i = 1; i <= max_b; ++i) pow_t[i] = pow_t[i - 1] * t_val;
  CycloInt total = CycloInt::zero(n);
  for (const auto& [e, c] : p.terms())
    total += pow_s[e[0]] * pow_t[e[1]] * c;
  return total;
}

std::complex<double> approximate_complex(const CycloInt& v) {
  const double angle =
      2.0 * std::numbers::pi / static_cast<double>(v.conductor());
  std::complex<double> xi(std::cos(angle), std::sin(angle));
  std::complex<double> total(0.0, 0.0);
  std::complex<double> power(1.0, 0.0);
  for (const auto& c : v.coeffs()) {
    total += static_cast<double>(c) * power;
    power *= xi;
  }
  return total;
}

}  // namespace sievekit
