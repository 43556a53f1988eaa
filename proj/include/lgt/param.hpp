#ifndef LGT_PARAM_HPP
#define LGT_PARAM_HPP

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lgt/linalg.hpp"
#include "lgt/polytope.hpp"
#include "lgt/rational.hpp"

namespace lgt {

// e^{<exponent, a>}. Trailing zeros are trimmed so equal monomials compare equal
// regardless of how many parameters the caller had in mind.
struct ParamMonomial {
  QVec exponent;

  ParamMonomial() = default;
  explicit ParamMonomial(QVec e);
  static ParamMonomial param(size_t i, const Rational& c = 1);

  ParamMonomial operator*(const ParamMonomial& o) const;
  ParamMonomial inverse() const;
  bool is_one() const { return exponent.empty(); }
  Rational at(size_t i) const { return i < exponent.size() ? exponent[i] : Rational(0); }
  auto operator<=>(const ParamMonomial& o) const = default;
  bool operator==(const ParamMonomial& o) const = default;
};

std::string to_string(const ParamMonomial& m);  // "e^{-a0-a3}", "1" for the unit

class ParamScalar {
 public:
  using Terms = std::map<ParamMonomial, Rational>;

  ParamScalar() = default;
  ParamScalar(const Rational& c);  // NOLINT: constants convert implicitly
  ParamScalar(long c) : ParamScalar(Rational(c)) {}
  ParamScalar(const ParamMonomial& m, const Rational& c = 1);
  static ParamScalar exp(const QVec& exponent) { return ParamScalar(ParamMonomial(exponent)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const { return terms_.size() == 1; }
  bool is_constant() const;  // zero or a single rational term
  Rational constant() const;  // throws unless is_constant

  ParamScalar operator+(const ParamScalar& o) const;
  ParamScalar operator-(const ParamScalar& o) const;
  ParamScalar operator-() const;
  ParamScalar operator*(const ParamScalar& o) const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  ParamScalar inverse() const;  // units only
  ParamScalar operator/(const ParamScalar& o) const { return *this * o.inverse(); }
  ParamScalar pow(long k) const;  // negative k only for units
  bool operator==(const ParamScalar& o) const { return terms_ == o.terms_; }

  double evaluate(const std::vector<double>& a) const;
  // Exact value when every exponent pairs to zero with a; throws otherwise.
  Rational specialize(const QVec& a) const;
  // a_i = sum_j M[i][j] b_j; the result is expressed in the b parameters.
  ParamScalar substitute(const QMat& M) const;
  size_t num_params() const;

 private:
  void add_term(const ParamMonomial& m, const Rational& c);
  Terms terms_;
};

std::string to_string(const ParamScalar& s);

class LaurentPoly {
 public:
  using Terms = std::map<IVec, ParamScalar>;

  LaurentPoly() = default;
  explicit LaurentPoly(size_t nvars) : nvars_(nvars) {}
  static LaurentPoly monomial(const IVec& e, const ParamScalar& c = 1);
  static LaurentPoly constant(size_t nvars, const ParamScalar& c);

  size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamScalar coeff(const IVec& e) const;
  std::vector<IVec> support() const;
  LatticePolytope newton_polytope() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const ParamScalar& c) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  // Negative exponents only for single-term polynomials with unit coefficient.
  LaurentPoly pow(long k) const;
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  void add_term(const IVec& e, const ParamScalar& c);
  LaurentPoly map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& fn) const;
  // x^e -> x^{M e}
  LaurentPoly change_variables(const IMat& M) const;

 private:
  size_t nvars_ = 0;
  Terms terms_;
};

std::string to_string(const LaurentPoly& f);

LaurentPoly face_restriction(const LaurentPoly& f, const FaceDescriptor& F);
ParamScalar constant_term(const LaurentPoly& f);
// Exact evaluation; throws on a zero coordinate or a non-vanishing parameter pairing.
Rational specialize(const LaurentPoly& f, const QVec& a, const QVec& x);
double evaluate(const LaurentPoly& f, const std::vector<double>& a, const std::vector<double>& x);
LaurentPoly substitute_params(const LaurentPoly& f, const QMat& M);

// Ascending powers of s.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<ParamScalar> c);
  static UniPoly linear(const ParamScalar& alpha, const ParamScalar& beta);  // alpha s + beta

  const std::vector<ParamScalar>& coeffs() const { return c_; }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const ParamScalar& operator[](size_t i) const { return c_[i]; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const ParamScalar& c) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  ParamScalar operator()(const ParamScalar& s) const;
  // Synthetic division by (s - r); returns quotient, remainder in rem.
  UniPoly divide_root(const ParamScalar& r, ParamScalar& rem) const;
  // Division by s (root at 0) or, dually, lowering the degree for a root at infinity.
  UniPoly shift_down() const;

 private:
  void trim();
  std::vector<ParamScalar> c_;
};

std::string to_string(const UniPoly& g, const std::string& var = "s");

class PowerSeries {
 public:
  PowerSeries(size_t order, std::vector<ParamScalar> c = {});
  size_t order() const { return order_; }
  const ParamScalar& operator[](size_t i) const { return c_[i]; }
  ParamScalar& operator[](size_t i) { return c_[i]; }
  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  bool operator==(const PowerSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

 private:
  size_t order_;
  std::vector<ParamScalar> c_;
};

// Parses printed-style expressions: numbers, x y z, e^{-a0-a3}, + - * /, ^int,
// parentheses and implicit multiplication. Division only by single terms.
LaurentPoly parse_laurent(std::string_view text, size_t nvars);
ParamScalar parse_scalar(std::string_view text);

}  // namespace lgt

#endif
