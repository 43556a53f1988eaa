#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "lgt/base_locus.hpp"
#include "lgt/embedding.hpp"

using namespace lgt;

TEST_CASE("anticanonical embeddings") {
  auto p3 = anticanonical_embedding(builtin_potential("P2").delta);
  CHECK(p3.has_relation(parse_binomial("x1*x2*x3 = x0^3")));
  auto e = builtin_potential("S6");
  auto emb = anticanonical_embedding(e.delta, e.labels);
  CHECK(emb.has_relation(parse_binomial("x6*x2 = x0*x1")));
  CHECK(emb.has_relation(parse_binomial("x1*x4 = x0^2")));
  CHECK(boundary_components(emb).size() == 6);
}

TEST_CASE("pencils") {
  CHECK(to_string(pencil_from_potential(builtin_potential("P2"))) == "|x1 + x2 + e^{-a0}*x3, x0|");
  auto cp = chart_pencil(builtin_potential("V4").potential, standard_chart(3));
  LaurentPoly sum(4);
  for (size_t i = 0; i < 4; ++i) {
    IVec e(4, 0);
    e[i] = 1;
    sum.add_term(e, 1);
  }
  CHECK(cp.member == sum.pow(4));
  CHECK(cp.boundary == IVec{1, 1, 1, 1});
}

TEST_CASE("degree conservation and base points on the pencil") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (const auto& id : potential_ids()) {
    auto e = builtin_potential(id);
    if (e.delta.rank() != 2) continue;
    CAPTURE(id);
    Pencil p = pencil_from_potential(e);
    BaseCycle bc = base_cycle(p);
    CHECK(bc.total_multiplicity() == normalized_volume(e.delta));
    std::vector<double> a(e.parameter_names.size());
    for (auto& x : a) x = u(rng);
    for (const auto& bp : bc.points) {
      // the member vanishes and x0 = 0
      double s = 0, scale = 0;
      for (size_t i = 0; i < p.member.size(); ++i) {
        double t = p.member[i].evaluate(a) * bp.coordinates[i].evaluate(a);
        s += t;
        scale += std::fabs(t);
      }
      CHECK(bp.coordinates[0].is_zero());
      CHECK(std::fabs(s) <= 1e-9 * (1 + scale));
      // the point satisfies every binomial relation
      for (const auto& r : p.embedding.relations) {
        ParamScalar l = 1, rr = 1;
        for (size_t i : r.lhs) l *= bp.coordinates[i];
        for (size_t i : r.rhs) rr *= bp.coordinates[i];
        CHECK(l == rr);
      }
    }
  }
}

TEST_CASE("factor reconstruction on all catalog restrictions") {
  size_t n = 0, edges = 0;
  for (const auto& id : potential_ids()) {
    auto e = builtin_potential(id);
    if (e.delta.rank() != 2) continue;
    edges += faces(e.delta, 1).size();
    Pencil p = pencil_from_potential(e);
    for (const auto& C : boundary_components(p.embedding)) {
      UniPoly g = restrict_pencil(p, C);
      auto fz = factor_unipoly(g, C.degree());
      CHECK(reconstruct(fz) == g);
      ++n;
    }
  }
  CHECK(n == edges);
  // trial division leaves an irreducible remainder
  UniPoly g = UniPoly({1, 1, 1}) * UniPoly({1, 1});
  auto fz = factor_unipoly(g);
  CHECK(fz.factors.size() == 1);
  CHECK(fz.remainder == UniPoly({1, 1, 1}));
}

TEST_CASE("cubic at a = 0 is 3p1 + 3p4 + 3p7") {
  BaseCycle bc = base_cycle(pencil_from_potential(builtin_potential("S3", false)));
  REQUIRE(bc.points.size() == 3);
  for (const auto& bp : bc.points) CHECK(bp.multiplicity == 3);
}

TEST_CASE("coincidence arrangement") {
  BaseCycle bc = base_cycle(pencil_from_potential(builtin_potential("S3")));
  auto arr = coincidence_arrangement(bc);
  CHECK_FALSE(arr.conditions.empty());
  CHECK(arr.distance(std::vector<double>(7, 0.0)) == doctest::Approx(0.0));
  CHECK(arr.in_open_complement({0.1, 0.37, 1.13, 2.71, 4.3, 7.9, 13.7}, 0.01));
}

TEST_CASE("threefold facet factorizations") {
  LaurentPoly f = builtin_potential("D22").potential;
  bool found = false;
  for (const auto& F : faces(f.newton_polytope(), 2)) {
    std::vector<LaurentPoly> fac{parse_laurent("x+y", 3), parse_laurent("x+z", 3), parse_laurent("x^2+y*z", 3)};
    if (verify_facet_factorization(f, F, fac, parse_laurent("x^-1*y^-2*z^-2", 3))) found = true;
    std::vector<LaurentPoly> wrong{parse_laurent("x+y", 3), parse_laurent("x+z", 3), parse_laurent("x^3+y*z", 3)};
    CHECK_FALSE(verify_facet_factorization(f, F, wrong, parse_laurent("x^-1*y^-2*z^-2", 3)));
  }
  CHECK(found);
  auto comps = plane_components(chart_pencil(builtin_potential("V4").potential, standard_chart(3)));
  REQUIRE(comps.size() == 4);
  for (const auto& c : comps) CHECK(c.power == 4);
  auto nodes = component_nodes(comps, 4);
  CHECK(nodes.size() == 6);
}
