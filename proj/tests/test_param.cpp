#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "lgt/catalog.hpp"
#include "lgt/linalg.hpp"
#include "lgt/param.hpp"
#include "lgt/potentials.hpp"

using namespace lgt;

namespace {

std::vector<ParamScalar> catalog_coefficients() {
  std::vector<ParamScalar> out;
  for (const auto& id : potential_ids()) {
    auto entry = builtin_potential(id);
    for (const auto& [e, c] : entry.potential.terms()) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar ring laws on catalog coefficients") {
  auto cs = catalog_coefficients();
  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const auto &a = cs[pick(rng)], &b = cs[pick(rng)], &c = cs[pick(rng)];
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK((a - a).terms().empty());
  }
}

TEST_CASE("units and parsing") {
  ParamScalar u = parse_scalar("e^{-a0-a3}");
  CHECK(u.is_unit());
  CHECK(u * u.inverse() == ParamScalar(1));
  CHECK(to_string(u) == "e^{-a0-a3}");
  CHECK_THROWS(parse_scalar("1 + e^{a0}").inverse());
  CHECK(parse_scalar("e^{a0/9}").pow(9) == parse_scalar("e^{a0}"));
}

TEST_CASE("constant terms by multinomial count") {
  LaurentPoly f = builtin_potential("P2").potential;
  CHECK(constant_term(f).is_zero());
  CHECK(constant_term(f.pow(3)) == parse_scalar("6*e^{-a0}"));
  CHECK(constant_term(builtin_potential("V8-cube").potential) == ParamScalar(8));
  CHECK(f * LaurentPoly::constant(2, 1) == f);
  // Newton polytope of f^2 is the Minkowski sum
  CHECK((f * f).newton_polytope() == minkowski_sum(f.newton_polytope(), f.newton_polytope()));
}

TEST_CASE("specialization") {
  LaurentPoly p2 = builtin_potential("P2").potential;
  CHECK(specialize(p2, {0}, {1, 1}) == 3);
  CHECK(specialize(builtin_potential("S6").potential, {0, 0, 0, 0}, {1, 1}) == 6);
  CHECK_THROWS(specialize(p2, {0}, {0, 1}));
  // evaluated in floating point away from zero
  CHECK(evaluate(p2, {1.0}, {1.0, 1.0}) == doctest::Approx(2 + std::exp(-1.0)));
}

TEST_CASE("face restriction") {
  LaurentPoly f = builtin_potential("S6").potential;
  for (const auto& E : faces(f.newton_polytope(), 1)) {
    std::set<IVec> pts(E.points.begin(), E.points.end());
    if (pts == std::set<IVec>{{1, 0}, {1, 1}}) CHECK(face_restriction(f, E) == parse_laurent("x + e^{-a2}*x*y", 2));
  }
  FaceDescriptor whole{2, {0, 0}, 0, f.newton_polytope().vertices(), lattice_points(f.newton_polytope())};
  CHECK(face_restriction(f, whole) == f);
}

TEST_CASE("face restriction commutes with parameter substitution on random faces") {
  std::mt19937 rng(11);
  auto ids = potential_ids();
  std::uniform_int_distribution<int> small(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    auto e = builtin_potential(ids[size_t(trial) % ids.size()]);
    const LaurentPoly& f = e.potential;
    int r = int(f.nvars());
    auto fs = faces(f.newton_polytope(), trial % r);
    const auto& F = fs[size_t(rng()) % fs.size()];
    size_t np = e.parameter_names.size();
    QMat M(np, QVec(2));
    for (auto& row : M)
      for (auto& x : row) x = Rational(small(rng)) / (1 + (trial % 3));
    CHECK(face_restriction(substitute_params(f, M), F) == substitute_params(face_restriction(f, F), M));
    // and with a = 0
    QMat Z(np, QVec(1, 0));
    CHECK(face_restriction(substitute_params(f, Z), F) == substitute_params(face_restriction(f, F), Z));
  }
}

TEST_CASE("catalog coefficients are positive at real parameters") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (const auto& id : potential_ids()) {
    auto e = builtin_potential(id);
    std::vector<double> a(e.parameter_names.size());
    for (auto& x : a) x = u(rng);
    for (const auto& [ex, c] : e.potential.terms()) CHECK(c.evaluate(a) > 0);
  }
}
