#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "lgt/periods.hpp"
#include "lgt/potentials.hpp"

using namespace lgt;

namespace {

mpz_class binom(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class fact(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

TEST_CASE("catalog potentials") {
  CHECK(builtin_potential("P2").potential == parse_laurent("x + y + e^{-a0}/(x*y)", 2));
  CHECK(builtin_potential("S6").parameter_names.size() == 4);
  CHECK(builtin_potential("V4").potential == parse_laurent("(x+y+z+1)^4/(x*y*z)", 3));
  CHECK(builtin_potential("P8b").fano_id == "S4");
  CHECK_THROWS(builtin_potential("nonexistent"));
  for (const auto& id : potential_ids()) {
    CAPTURE(id);
    CHECK(newton_check(builtin_potential(id)));
  }
}

TEST_CASE("vertex extension") {
  LaurentPoly s7 = builtin_potential("S7").potential;
  CHECK(vertex_extension(s7, {-1, 0}, parse_scalar("e^{-a0-a3}")) == builtin_potential("S6").potential);
  CHECK_THROWS(vertex_extension(s7, {1, 0}, ParamScalar(1)));
  // deleting a vertex term breaks the Newton check
  auto e = builtin_potential("P2");
  e.potential = parse_laurent("x + y", 2);
  CHECK_FALSE(newton_check(e));
}

TEST_CASE("boundary corrections at a = 0 are binomial coefficients") {
  for (const auto& id : potential_ids()) {
    auto e = builtin_potential(id, false);
    if (e.delta.rank() != 2) continue;
    CAPTURE(id);
    for (const auto& E : faces(e.delta, 1)) {
      long k = long(E.points.size()) - 1;
      for (long i = 0; i <= k; ++i) CHECK(e.potential.coeff(E.points[size_t(i)]) == ParamScalar(Rational(binom(k, i))));
    }
  }
  std::vector<ParamScalar> ones(4, ParamScalar(1));
  CHECK(corrected_coefficient(ones, 1) == ParamScalar(3));
  CHECK(corrected_coefficient(ones, 2) == ParamScalar(3));
}

TEST_CASE("boundary correction of one edge") {
  // m = (m0, m1, m2) along w0, w1, w2: coefficient at w1 is m1 + m0 m2 / m1
  std::vector<ParamScalar> m{parse_scalar("e^{-a0-a1-a2}"), parse_scalar("e^{-a0-a1}"), parse_scalar("e^{-a0}")};
  CHECK(corrected_coefficient(m, 1) == parse_scalar("e^{-a0-a1} + e^{-a0-a2}"));
}

TEST_CASE("classical periods by multinomial count") {
  PowerSeries p = classical_period(builtin_potential("P2", false).potential, 9);
  for (long k = 0; k <= 9; ++k) {
    CAPTURE(k);
    mpz_class want = k % 3 ? mpz_class(0) : fact(k) / (fact(k / 3) * fact(k / 3) * fact(k / 3));
    CHECK(p[size_t(k)] == ParamScalar(Rational(want)));
  }
  PowerSeries q = classical_period(builtin_potential("P2").potential, 3);
  CHECK(q[0] == ParamScalar(1));
  CHECK(q[1].is_zero());
  CHECK(q[2].is_zero());
  CHECK(q[3] == parse_scalar("6*e^{-a0}"));
}

TEST_CASE("period matching") {
  auto cube = builtin_potential("V8-cube", false).potential;
  auto alt = builtin_potential("V8-alt", false).potential;
  CHECK(period_match(cube, alt, 8).match);
  CHECK(period_match(cube, cube, 5).match);
  CHECK_THROWS(period_match(cube, builtin_potential("P2", false).potential, 3));
  auto m = period_match(cube, builtin_potential("V4", false).potential, 6);
  CHECK_FALSE(m.match);
  REQUIRE(m.first_mismatch);
  CHECK(*m.first_mismatch <= 2);
}

TEST_CASE("catalog records round trip") {
  std::istringstream in(builtin_catalog_text());
  auto entries = load_catalog(in);
  CHECK(entries.size() == potential_ids().size());
  for (const auto& e : entries) CHECK(e.potential == builtin_potential(e.fano_id).potential);
}
