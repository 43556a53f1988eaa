#include "lgt/param.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace lgt {

namespace {

void trim_zeros(QVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

// ---------------------------------------------------------------- monomials

ParamMonomial::ParamMonomial(QVec e) : exponent(std::move(e)) { trim_zeros(exponent); }

ParamMonomial ParamMonomial::param(size_t i, const Rational& c) {
  QVec e(i + 1, 0);
  e[i] = c;
  return ParamMonomial(e);
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& o) const {
  QVec e(std::max(exponent.size(), o.exponent.size()), 0);
  for (size_t i = 0; i < e.size(); ++i) e[i] = at(i) + o.at(i);
  return ParamMonomial(e);
}

ParamMonomial ParamMonomial::inverse() const {
  QVec e(exponent);
  for (auto& x : e) x = -x;
  return ParamMonomial(e);
}

std::string to_string(const ParamMonomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (size_t i = 0; i < m.exponent.size(); ++i) {
    const Rational& c = m.exponent[i];
    if (c == 0) continue;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    mpz_class p = abs(c.get_num());
    if (p != 1) s += p.get_str();
    s += "a" + std::to_string(i);
    if (c.get_den() != 1) s += "/" + c.get_den().get_str();
  }
  return "e^{" + s + "}";
}

// ---------------------------------------------------------------- scalars

ParamScalar::ParamScalar(const Rational& c) {
  if (c != 0) terms_[ParamMonomial()] = c;
}

ParamScalar::ParamScalar(const ParamMonomial& m, const Rational& c) {
  if (c != 0) terms_[m] = c;
}

void ParamScalar::add_term(const ParamMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool ParamScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ParamScalar::constant() const {
  if (!is_constant()) throw std::domain_error("scalar " + to_string(*this) + " is not a rational constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const {
  ParamScalar r(*this);
  r += o;
  return r;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ParamScalar ParamScalar::operator-(const ParamScalar& o) const { return *this + (-o); }

ParamScalar ParamScalar::operator*(const ParamScalar& o) const {
  ParamScalar r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) { return *this = *this * o; }

ParamScalar ParamScalar::inverse() const {
  if (!is_unit()) throw std::domain_error("inverse of non-unit scalar " + to_string(*this));
  const auto& [m, c] = *terms_.begin();
  return ParamScalar(m.inverse(), 1 / c);
}

ParamScalar ParamScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  ParamScalar r(1), b(*this);
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

double ParamScalar::evaluate(const std::vector<double>& a) const {
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double e = 0;
    for (size_t i = 0; i < m.exponent.size(); ++i) {
      if (m.exponent[i] == 0) continue;
      if (i >= a.size()) throw std::invalid_argument("missing parameter a" + std::to_string(i));
      e += m.exponent[i].get_d() * a[i];
    }
    s += c.get_d() * std::exp(e);
  }
  return s;
}

Rational ParamScalar::specialize(const QVec& a) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational e = 0;
    for (size_t i = 0; i < m.exponent.size(); ++i) e += m.exponent[i] * (i < a.size() ? a[i] : Rational(0));
    if (e != 0) throw std::domain_error("e^{" + e.get_str() + "} is not rational");
    s += c;
  }
  return s;
}

ParamScalar ParamScalar::substitute(const QMat& M) const {
  ParamScalar r;
  for (const auto& [m, c] : terms_) {
    size_t cols = M.empty() ? 0 : M[0].size();
    QVec e(cols, 0);
    for (size_t i = 0; i < m.exponent.size(); ++i) {
      if (m.exponent[i] == 0) continue;
      if (i >= M.size()) throw std::invalid_argument("substitution misses a" + std::to_string(i));
      for (size_t j = 0; j < cols; ++j) e[j] += m.exponent[i] * M[i][j];
    }
    r.add_term(ParamMonomial(e), c);
  }
  return r;
}

size_t ParamScalar::num_params() const {
  size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.exponent.size());
  return n;
}

std::string to_string(const ParamScalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    std::string t;
    Rational mag = abs(c);
    if (m.is_one())
      t = mag.get_str();
    else if (mag == 1)
      t = to_string(m);
    else
      t = mag.get_str() + "*" + to_string(m);
    if (c < 0)
      out += out.empty() ? "-" : " - ";
    else if (!out.empty())
      out += " + ";
    out += t;
  }
  return out;
}

// ---------------------------------------------------------------- Laurent polynomials

LaurentPoly LaurentPoly::monomial(const IVec& e, const ParamScalar& c) {
  LaurentPoly f(e.size());
  f.add_term(e, c);
  return f;
}

LaurentPoly LaurentPoly::constant(size_t nvars, const ParamScalar& c) { return monomial(IVec(nvars, 0), c); }

void LaurentPoly::add_term(const IVec& e, const ParamScalar& c) {
  if (e.size() != nvars_) throw std::invalid_argument("torus rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ParamScalar LaurentPoly::coeff(const IVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ParamScalar() : it->second;
}

std::vector<IVec> LaurentPoly::support() const {
  std::vector<IVec> s;
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

LatticePolytope LaurentPoly::newton_polytope() const {
  if (terms_.empty()) throw std::domain_error("Newton polytope of zero");
  return LatticePolytope(support());
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("torus rank mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const { return *this * ParamScalar(-1); }
LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("torus rank mismatch");
  LaurentPoly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const ParamScalar& c) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, k] : terms_) r.add_term(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::pow(long k) const {
  if (k < 0) {
    if (terms_.size() != 1 || !terms_.begin()->second.is_unit())
      throw std::domain_error("negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    return monomial(-e, c.inverse()).pow(-k);
  }
  LaurentPoly r = constant(nvars_, 1), b(*this);
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

LaurentPoly LaurentPoly::map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& fn) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
  return r;
}

LaurentPoly LaurentPoly::change_variables(const IMat& M) const {
  LaurentPoly r(M.size());
  for (const auto& [e, c] : terms_) r.add_term(apply(M, e), c);
  return r;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  static const char* names[] = {"x", "y", "z", "w"};
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < 4 ? names[i] : "x" + std::to_string(i);
      if (e[i] != 1) mono += "^{" + std::to_string(e[i]) + "}";
    }
    std::string coef;
    bool neg = false;
    if (c.is_unit()) {
      const auto& [m, k] = *c.terms().begin();
      neg = k < 0;
      coef = to_string(neg ? -c : c);
      if (coef == "1" && !mono.empty()) coef.clear();
    } else {
      coef = "(" + to_string(c) + ")";
    }
    std::string term = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

LaurentPoly face_restriction(const LaurentPoly& f, const FaceDescriptor& F) {
  if (f.is_zero()) throw std::domain_error("restriction of zero");
  long best = dot(F.normal, f.terms().begin()->first);
  for (const auto& [e, c] : f.terms()) best = std::max(best, dot(F.normal, e));
  if (best != F.offset) throw std::invalid_argument("not a face of the Newton polytope");
  LaurentPoly r(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (dot(F.normal, e) == F.offset) r.add_term(e, c);
  for (const auto& v : F.vertices)
    if (r.coeff(v).is_zero()) throw std::invalid_argument("face vertex " + to_string(v) + " not in the support");
  return r;
}

ParamScalar constant_term(const LaurentPoly& f) { return f.coeff(IVec(f.nvars(), 0)); }

Rational specialize(const LaurentPoly& f, const QVec& a, const QVec& x) {
  if (x.size() != f.nvars()) throw std::invalid_argument("torus rank mismatch");
  for (const auto& xi : x)
    if (xi == 0) throw std::domain_error("zero torus coordinate");
  Rational s = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational m = c.specialize(a);
    for (size_t i = 0; i < e.size(); ++i) {
      Rational p = 1;
      Rational b = e[i] < 0 ? Rational(1 / x[i]) : x[i];
      for (long k = 0; k < std::labs(e[i]); ++k) p *= b;
      m *= p;
    }
    s += m;
  }
  return s;
}

double evaluate(const LaurentPoly& f, const std::vector<double>& a, const std::vector<double>& x) {
  double s = 0;
  for (const auto& [e, c] : f.terms()) {
    double m = c.evaluate(a);
    for (size_t i = 0; i < e.size(); ++i) m *= std::pow(x[i], double(e[i]));
    s += m;
  }
  return s;
}

LaurentPoly substitute_params(const LaurentPoly& f, const QMat& M) {
  return f.map_coefficients([&](const ParamScalar& c) { return c.substitute(M); });
}

// ---------------------------------------------------------------- univariate

UniPoly::UniPoly(std::vector<ParamScalar> c) : c_(std::move(c)) { trim(); }

UniPoly UniPoly::linear(const ParamScalar& alpha, const ParamScalar& beta) { return UniPoly({beta, alpha}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<ParamScalar> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return UniPoly(r);
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<ParamScalar> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(r);
}

UniPoly UniPoly::operator*(const ParamScalar& k) const {
  std::vector<ParamScalar> r(c_);
  for (auto& x : r) x *= k;
  return UniPoly(r);
}

ParamScalar UniPoly::operator()(const ParamScalar& s) const {
  ParamScalar acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * s + c_[i];
  return acc;
}

UniPoly UniPoly::divide_root(const ParamScalar& r, ParamScalar& rem) const {
  if (c_.empty()) {
    rem = ParamScalar();
    return UniPoly();
  }
  std::vector<ParamScalar> q(c_.size() - 1);
  ParamScalar acc;
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * r + c_[i];
    if (i > 0) q[i - 1] = acc;
  }
  rem = acc;
  return UniPoly(q);
}

UniPoly UniPoly::shift_down() const {
  if (c_.empty()) return UniPoly();
  if (!c_[0].is_zero()) throw std::domain_error("s does not divide the polynomial");
  return UniPoly(std::vector<ParamScalar>(c_.begin() + 1, c_.end()));
}

std::string to_string(const UniPoly& g, const std::string& var) {
  if (g.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= g.degree(); ++i) {
    if (g[i].is_zero()) continue;
    std::string c = g[i].is_unit() ? to_string(g[i]) : "(" + to_string(g[i]) + ")";
    std::string pw = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string t = pw.empty() ? c : (c == "1" ? pw : (c == "-1" ? "-" + pw : c + "*" + pw));
    out += out.empty() ? t : " + " + t;
  }
  return out;
}

// ---------------------------------------------------------------- power series

PowerSeries::PowerSeries(size_t order, std::vector<ParamScalar> c) : order_(order), c_(std::move(c)) {
  c_.resize(order + 1);
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  PowerSeries r(std::min(order_, o.order_));
  for (size_t i = 0; i <= r.order_; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  PowerSeries r(std::min(order_, o.order_));
  for (size_t i = 0; i <= r.order_; ++i)
    for (size_t j = 0; i + j <= r.order_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
  return r;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view s, size_t nvars) : s_(s), n_(nvars) {}

  LaurentPoly parse() {
    LaurentPoly f = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  LaurentPoly expr() {
    LaurentPoly f(n_);
    bool neg = eat('-');
    if (!neg) eat('+');
    LaurentPoly t = term();
    f += neg ? -t : t;
    while (true) {
      if (eat('+'))
        f += term();
      else if (eat('-'))
        f += -term();
      else
        return f;
    }
  }

  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'e' || var_index(c) >= 0;
  }

  LaurentPoly term() {
    LaurentPoly f = power();
    while (true) {
      if (eat('*')) {
        f = f * power();
      } else if (eat('/')) {
        f = f * power().pow(-1);
      } else if (starts_factor()) {
        f = f * power();
      } else {
        return f;
      }
    }
  }

  long integer() {
    skip();
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) neg = s_[i_++] == '-';
    size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(b, i_ - b)));
    return neg ? -v : v;
  }

  LaurentPoly power() {
    LaurentPoly f = primary();
    if (eat('^')) {
      long k;
      if (eat('{')) {
        k = integer();
        expect('}');
      } else {
        k = integer();
      }
      f = f.pow(k);
    }
    return f;
  }

  int var_index(char c) const {
    static const std::string names = "xyz";
    auto p = names.find(c);
    return p == std::string::npos || p >= n_ ? -1 : int(p);
  }

  LaurentPoly primary() {
    char c = peek();
    if (c == '(') {
      ++i_;
      LaurentPoly f = expr();
      expect(')');
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t b = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return LaurentPoly::constant(n_, Rational(mpz_class(std::string(s_.substr(b, i_ - b)))));
    }
    if (c == 'e' && i_ + 1 < s_.size() && s_[i_ + 1] == '^') {
      i_ += 2;
      expect('{');
      QVec e = linear();
      expect('}');
      return LaurentPoly::constant(n_, ParamScalar::exp(e));
    }
    int v = var_index(c);
    if (v >= 0) {
      ++i_;
      IVec e(n_, 0);
      e[v] = 1;
      return LaurentPoly::monomial(e);
    }
    fail("unexpected character");
  }

  // Linear combination of parameters a_i with rational coefficients.
  QVec linear() {
    QVec e;
    bool first = true;
    while (true) {
      char c = peek();
      if (c == '}') break;
      Rational sign = 1;
      if (c == '-' || c == '+') {
        sign = c == '-' ? -1 : 1;
        ++i_;
      } else if (!first) {
        fail("expected sign");
      }
      first = false;
      Rational coef = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = integer();
        eat('*');
      }
      if (peek() != 'a') fail("expected parameter a<i>");
      ++i_;
      size_t b = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (b == i_) fail("expected parameter index");
      size_t idx = std::stoul(std::string(s_.substr(b, i_ - b)));
      if (eat('/')) coef /= integer();
      if (e.size() <= idx) e.resize(idx + 1, 0);
      e[idx] += sign * coef;
    }
    return e;
  }

  std::string_view s_;
  size_t n_;
  size_t i_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, size_t nvars) { return Parser(text, nvars).parse(); }

ParamScalar parse_scalar(std::string_view text) { return constant_term(parse_laurent(text, 0)); }

}  // namespace lgt
