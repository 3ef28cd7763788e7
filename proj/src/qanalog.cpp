#include "sievekit/qanalog.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace sievekit {

namespace {

const std::vector<std::string> kQ{"q"};

std::mutex g_mutex;
std::vector<MultiPoly> g_factorials;       // g_factorials[n] = [n]!_q
std::vector<MultiPoly> g_carlitz_riordan;  // memoized C~_n

}  // namespace

MultiPoly q_int(unsigned n) {
  MultiPoly p(kQ);
  for (unsigned i = 0; i < n; ++i) p.add_term({i}, 1);
  return p;
}

MultiPoly q_factorial(unsigned n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_factorials.empty())
    g_factorials.push_back(MultiPoly::constant(kQ, 1));
  while (g_factorials.size() <= n) {
    const unsigned m = static_cast<unsigned>(g_factorials.size());
    g_factorials.push_back(g_factorials.back() * q_int(m));
  }
  return g_factorials[n];
}

MultiPoly q_binomial(unsigned n, unsigned k) {
  if (k > n) return MultiPoly(kQ);
  return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

MultiPoly q_multinomial(unsigned n, const std::vector<unsigned>& parts) {
  const unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
  if (total != n)
    throw Error("q_multinomial: parts must sum to n");
  MultiPoly den = MultiPoly::constant(kQ, 1);
  for (unsigned p : parts) den *= q_factorial(p);
  return exact_div(q_factorial(n), den);
}

MultiPoly q_catalan(unsigned n) {
  return exact_div(q_binomial(2 * n, n), q_int(n + 1));
}

MultiPoly q_narayana(unsigned n, unsigned k) {
  if (n < 1 || k > n - 1)
    throw Error("q_narayana: requires n >= 1 and 0 <= k <= n-1");
  MultiPoly shift(kQ);
  shift.add_term({k * (k + 1)}, 1);
  return exact_div(q_binomial(n, k) * q_binomial(n, k + 1) * shift, q_int(n));
}

MultiPoly q_kirkman(unsigned n, unsigned k) {
  if (n < 3 || k > n - 3)
    throw Error("q_kirkman: requires n >= 3 and 0 <= k <= n-3");
  return exact_div(q_binomial(n + k, k + 1) * q_binomial(n - 3, k),
                   q_int(n + k));
}

MultiPoly carlitz_riordan(unsigned n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_carlitz_riordan.empty())
    g_carlitz_riordan.push_back(MultiPoly::constant(kQ, 1));
  while (g_carlitz_riordan.size() <= n) {
    const unsigned m = static_cast<unsigned>(g_carlitz_riordan.size()) - 1;
    MultiPoly next(kQ);
    for (unsigned k = 0; k <= m; ++k) {
      MultiPoly shift(kQ);
      shift.add_term({k}, 1);
      next += shift * g_carlitz_riordan[k] * g_carlitz_riordan[m - k];
    }
    g_carlitz_riordan.push_back(next);
  }
  return g_carlitz_riordan[n];
}

}  // namespace sievekit
