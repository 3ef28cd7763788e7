#include "sievekit/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sievekit {

namespace {

unsigned degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a > b;  // lexicographically larger exponent vector first
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.size() > 4) throw Error("MultiPoly supports at most 4 variables");
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, BigInt c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0u), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars,
                              const std::string& name) {
  MultiPoly p(std::move(vars));
  auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
  if (it == p.vars_.end())
    throw Error("variable '" + name + "' not in variable list");
  Exponents e(p.vars_.size(), 0u);
  e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
  p.add_term(e, 1);
  return p;
}

unsigned MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  return degree_of(terms_.begin()->first);  // leading term has maximal degree
}

void MultiPoly::add_term(const Exponents& exps, const BigInt& c) {
  if (exps.size() != vars_.size())
    throw Error("exponent vector length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::check_compatible(const MultiPoly& rhs) const {
  if (vars_ != rhs.vars_)
    throw Error("polynomial variable lists differ");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  check_compatible(rhs);
  MultiPoly out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_.swap(out.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw DivisionByZero("exact_div: zero divisor");
  if (p.vars() != d.vars()) throw Error("polynomial variable lists differ");
  MultiPoly quotient(p.vars());
  MultiPoly remainder = p;
  const auto& dlead = *d.terms().begin();
  // Over an integral domain the leading monomial of q*d is LM(q)*LM(d), so
  // peeling leading terms reconstructs q exactly whenever it exists.
  while (!remainder.is_zero()) {
    const auto& rlead = *remainder.terms().begin();
    Exponents qe(rlead.first);
    for (std::size_t i = 0; i < qe.size(); ++i) {
      if (qe[i] < dlead.first[i])
        throw NotDivisible("exact_div: leading monomial not divisible");
      qe[i] -= dlead.first[i];
    }
    if (rlead.second % dlead.second != 0)
      throw NotDivisible("exact_div: leading coefficient not divisible");
    BigInt qc = rlead.second / dlead.second;
    MultiPoly qterm(p.vars());
    qterm.add_term(qe, qc);
    quotient += qterm;
    remainder -= qterm * d;
  }
  return quotient;
}

MultiPoly poly_pow(const MultiPoly& p, unsigned e) {
  MultiPoly r = MultiPoly::constant(p.vars(), 1);
  MultiPoly base = p;
  while (e) {
    if (e & 1) r *= base;
    if (e >>= 1) base *= base;
  }
  return r;
}

BigInt evaluate_int(const MultiPoly& p,
                    const std::map<std::string, BigInt>& values) {
  std::vector<BigInt> point;
  point.reserve(p.vars().size());
  for (const auto& v : p.vars()) {
    auto it = values.find(v);
    if (it == values.end())
      throw Error("evaluate_int: missing value for variable '" + v + "'");
    point.push_back(it->second);
  }
  BigInt total = 0;
  for (const auto& [e, c] : p.terms()) {
    BigInt term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= big_pow(point[i], e[i]);
    total += term;
  }
  return total;
}

MultiPoly substitute(const MultiPoly& p,
                     const std::map<std::string, MultiPoly>& images,
                     const std::vector<std::string>& target_vars) {
  std::vector<const MultiPoly*> image;
  image.reserve(p.vars().size());
  for (const auto& v : p.vars()) {
    auto it = images.find(v);
    if (it == images.end())
      throw Error("substitute: missing image for variable '" + v + "'");
    if (it->second.vars() != target_vars)
      throw Error("substitute: image of '" + v +
                  "' is not over the target variables");
    image.push_back(&it->second);
  }
  MultiPoly out(target_vars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= poly_pow(*image[i], e[i]);
    out += term;
  }
  return out;
}

namespace {

std::size_t var_index(const MultiPoly& p, const std::string& v) {
  auto it = std::find(p.vars().begin(), p.vars().end(), v);
  if (it == p.vars().end())
    throw Error("variable '" + v + "' not in polynomial");
  return static_cast<std::size_t>(it - p.vars().begin());
}

}  // namespace

bool is_symmetric(const MultiPoly& p, const std::string& v1,
                  const std::string& v2) {
  const std::size_t i = var_index(p, v1), j = var_index(p, v2);
  MultiPoly swapped(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f(e);
    std::swap(f[i], f[j]);
    swapped.add_term(f, c);
  }
  return swapped == p;
}

MultiPoly to_elementary_basis(const MultiPoly& p, const std::string& v1,
                              const std::string& v2) {
  if (!is_symmetric(p, v1, v2))
    throw NotSymmetric("to_elementary_basis: not symmetric in " + v1 + ", " +
                       v2);
  const std::size_t i = var_index(p, v1), j = var_index(p, v2);
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (k != i && k != j && e[k] != 0)
        throw Error("to_elementary_basis: polynomial involves other variables");
  }
  const std::vector<std::string> evars{"e1", "e2"};
  const MultiPoly x = MultiPoly::variable(p.vars(), v1);
  const MultiPoly y = MultiPoly::variable(p.vars(), v2);
  const MultiPoly s1 = x + y;
  const MultiPoly s2 = x * y;
  MultiPoly out(evars);
  MultiPoly rem = p;
  // Leading-term elimination: a symmetric leading monomial v1^a v2^b with
  // a >= b is killed by c * e1^(a-b) e2^b, which has the same leading term.
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().begin();
    const unsigned a = e[i], b = e[j];
    if (a < b)
      throw NotSymmetric("to_elementary_basis: leading term inconsistent");
    out.add_term(Exponents{a - b, b}, c);
    rem -= poly_pow(s1, a - b) * poly_pow(s2, b) * c;
  }
  return out;
}

bool has_nonnegative_coefficients(const MultiPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    (void)e;
    if (c < 0) return false;
  }
  return true;
}

std::string to_canonical_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (mag != 1 || degree_of(e) == 0) factors.push_back(mag.str());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] == 1)
        factors.push_back(p.vars()[i]);
      else
        factors.push_back(p.vars()[i] + "^" + std::to_string(e[i]));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

namespace {

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Caret, End } kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ >= s_.size()) {
      tok_ = {Token::End, ""};
      return;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      tok_ = {Token::Int, s_.substr(start, pos_ - start)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Ident, s_.substr(start, pos_ - start)};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = {Token::Plus, "+"}; return;
      case '-': tok_ = {Token::Minus, "-"}; return;
      case '*': tok_ = {Token::Star, "*"}; return;
      case '^': tok_ = {Token::Caret, "^"}; return;
      default: throw ParseError(std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  Token tok_;
};

}  // namespace

MultiPoly parse_poly(const std::string& text,
                     const std::vector<std::string>& vars) {
  Lexer lex(text);
  MultiPoly out(vars);
  bool expect_term = true;
  int sign = 1;
  if (lex.peek().kind == Token::Minus) {
    sign = -1;
    lex.take();
  }
  while (expect_term) {
    // One term: factor ('*' factor)*
    BigInt coeff = sign;
    Exponents exps(vars.size(), 0u);
    bool more_factors = true;
    bool saw_factor = false;
    while (more_factors) {
      Token t = lex.take();
      if (t.kind == Token::Int) {
        coeff *= BigInt(t.text);
      } else if (t.kind == Token::Ident) {
        auto it = std::find(vars.begin(), vars.end(), t.text);
        if (it == vars.end())
          throw ParseError("unknown variable '" + t.text + "'");
        unsigned e = 1;
        if (lex.peek().kind == Token::Caret) {
          lex.take();
          Token p = lex.take();
          if (p.kind != Token::Int)
            throw ParseError("expected integer exponent after '^'");
          e = static_cast<unsigned>(std::stoul(p.text));
        }
        exps[static_cast<std::size_t>(it - vars.begin())] += e;
      } else {
        throw ParseError("expected a factor");
      }
      saw_factor = true;
      if (lex.peek().kind == Token::Star) {
        lex.take();
      } else {
        more_factors = false;
      }
    }
    if (!saw_factor) throw ParseError("empty term");
    out.add_term(exps, coeff);
    switch (lex.peek().kind) {
      case Token::Plus:
        lex.take();
        sign = 1;
        break;
      case Token::Minus:
        lex.take();
        sign = -1;
        break;
      case Token::End:
        expect_term = false;
        break;
      default:
        throw ParseError("expected '+', '-' or end of input");
    }
  }
  return out;
}

}  // namespace sievekit
