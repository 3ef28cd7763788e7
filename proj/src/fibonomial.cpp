#include "sievekit/fibonomial.hpp"

#include <mutex>
#include <numeric>

#include "sievekit/qanalog.hpp"

namespace sievekit {

namespace {

const std::vector<std::string> kST{"s", "t"};
const std::vector<std::string> kAB{"a", "b"};

std::mutex g_mutex;
std::vector<MultiPoly> g_fib;        // {m}
std::vector<MultiPoly> g_fib_fact;   // {m}!

void extend_tables(unsigned m) {
  if (g_fib.empty()) {
    g_fib.push_back(MultiPoly(kST));                   // {0} = 0
    g_fib.push_back(MultiPoly::constant(kST, 1));      // {1} = 1
    g_fib_fact.push_back(MultiPoly::constant(kST, 1)); // {0}! = 1
  }
  const MultiPoly s = MultiPoly::variable(kST, "s");
  const MultiPoly t = MultiPoly::variable(kST, "t");
  while (g_fib.size() <= m)
    g_fib.push_back(s * g_fib[g_fib.size() - 1] + t * g_fib[g_fib.size() - 2]);
  while (g_fib_fact.size() <= m) {
    const unsigned i = static_cast<unsigned>(g_fib_fact.size());
    g_fib_fact.push_back(g_fib_fact.back() * g_fib[i]);
  }
}

}  // namespace

MultiPoly fib_poly(unsigned m) {
  std::lock_guard<std::mutex> lock(g_mutex);
  extend_tables(m);
  return g_fib[m];
}

MultiPoly fib_factorial(unsigned m) {
  std::lock_guard<std::mutex> lock(g_mutex);
  extend_tables(m);
  return g_fib_fact[m];
}

MultiPoly fibonomial(unsigned n, unsigned k) {
  if (k > n) return MultiPoly(kST);
  return exact_div(fib_factorial(n), fib_factorial(k) * fib_factorial(n - k));
}

MultiPoly st_catalan(unsigned n) {
  return exact_div(fibonomial(2 * n, n), fib_poly(n + 1));
}

MultiPoly st_narayana(unsigned n, unsigned k) {
  if (n < 1 || k > n - 1)
    throw Error("st_narayana: requires n >= 1 and 0 <= k <= n-1");
  return exact_div(fibonomial(n, k) * fibonomial(n, k + 1), fib_poly(n));
}

bool narayana_identity_check(unsigned n, unsigned k) {
  if (n < 2 || k > n - 1)
    throw Error("narayana_identity_check: requires n >= 2 and 0 <= k <= n-1");
  const MultiPoly e0 = st_narayana(n, k);
  const MultiPoly e1 =
      exact_div(fibonomial(n, k + 1) * fibonomial(n - 1, k), fib_poly(n - k));
  const MultiPoly e2 =
      exact_div(fibonomial(n, k) * fibonomial(n - 1, k), fib_poly(k + 1));
  return e0 == e1 && e1 == e2;
}

bool xy_specialization_check(unsigned n, unsigned k) {
  if (n > 10)
    throw ScaleExceeded("xy_specialization_check: n <= 10 required");
  const MultiPoly a = MultiPoly::variable(kAB, "a");
  const MultiPoly b = MultiPoly::variable(kAB, "b");
  std::map<std::string, MultiPoly> images{{"s", a + b}, {"t", -(a * b)}};
  const MultiPoly lhs = substitute(fibonomial(n, k), images, kAB);
  // b^(k(n-k)) [n over k]_{a/b}: homogenize each q^j to a^j b^(k(n-k)-j).
  const unsigned top = k * (n - k);
  const MultiPoly qb = q_binomial(n, k);
  MultiPoly rhs(kAB);
  for (const auto& [e, c] : qb.terms())
    rhs.add_term({e[0], top - e[0]}, c);
  return lhs == rhs;
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw Error("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error("Partition: parts must be weakly decreasing");
  }
}

unsigned Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<unsigned> conj(parts_[0], 0u);
  for (unsigned col = 0; col < parts_[0]; ++col)
    for (unsigned row = 0; row < parts_.size(); ++row)
      if (parts_[row] > col) ++conj[col];
  return Partition(std::move(conj));
}

unsigned Partition::b_statistic() const {
  unsigned b = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    b += static_cast<unsigned>(i) * parts_[i];
  return b;
}

std::vector<int> Partition::contents() const {
  std::vector<int> cs;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (unsigned j = 0; j < parts_[i]; ++j)
      cs.push_back(static_cast<int>(j) - static_cast<int>(i));
  return cs;
}

std::vector<unsigned> Partition::hook_lengths() const {
  const Partition conj = conjugate();
  std::vector<unsigned> hs;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (unsigned j = 0; j < parts_[i]; ++j) {
      const unsigned arm = parts_[i] - j - 1;
      const unsigned leg = conj.parts()[j] - static_cast<unsigned>(i) - 1;
      hs.push_back(arm + leg + 1);
    }
  return hs;
}

MultiPoly hook_content_product(const Partition& lambda, unsigned n) {
  if (lambda.num_parts() > n)
    throw Error("hook_content_product: partition has more than n parts");
  MultiPoly num = MultiPoly::constant(kST, 1);
  for (int c : lambda.contents())
    num *= fib_poly(static_cast<unsigned>(static_cast<int>(n) + c));
  MultiPoly den = MultiPoly::constant(kST, 1);
  for (unsigned h : lambda.hook_lengths()) den *= fib_poly(h);
  MultiPoly quotient = exact_div(num, den);
  const unsigned b = lambda.b_statistic();
  MultiPoly prefactor(kST);  // (-t)^b
  prefactor.add_term({0, b}, (b % 2 == 0) ? BigInt(1) : BigInt(-1));
  return prefactor * quotient;
}

namespace {

// Backtracking enumeration of semistandard tableaux: rows weakly increase,
// columns strictly increase.
void ssyt_fill(const std::vector<unsigned>& parts, unsigned n,
               std::vector<std::vector<unsigned>>& tableau, std::size_t row,
               unsigned col, MultiPoly& acc,
               std::vector<unsigned>& entry_counts) {
  if (row == parts.size()) {
    Exponents e{0u, 0u};
    for (unsigned v = 1; v <= n; ++v) {
      e[0] += entry_counts[v] * (n - v);
      e[1] += entry_counts[v] * (v - 1);
    }
    acc.add_term(e, 1);
    return;
  }
  if (col == parts[row]) {
    ssyt_fill(parts, n, tableau, row + 1, 0, acc, entry_counts);
    return;
  }
  unsigned lo = 1;
  if (col > 0) lo = std::max(lo, tableau[row][col - 1]);
  if (row > 0) lo = std::max(lo, tableau[row - 1][col] + 1);
  for (unsigned v = lo; v <= n; ++v) {
    tableau[row][col] = v;
    ++entry_counts[v];
    ssyt_fill(parts, n, tableau, row, col + 1, acc, entry_counts);
    --entry_counts[v];
  }
}

}  // namespace

MultiPoly schur_geometric_oracle(const Partition& lambda, unsigned n) {
  if (lambda.size() > 6 || n > 7)
    throw ScaleExceeded("schur_geometric_oracle: |lambda| <= 6 and n <= 7");
  MultiPoly acc(kAB);
  if (lambda.num_parts() > n) return acc;  // no column-strict filling exists
  std::vector<std::vector<unsigned>> tableau;
  for (unsigned p : lambda.parts())
    tableau.emplace_back(p, 0u);
  std::vector<unsigned> entry_counts(n + 1, 0u);
  ssyt_fill(lambda.parts(), n, tableau, 0, 0, acc, entry_counts);
  return acc;
}

}  // namespace sievekit
