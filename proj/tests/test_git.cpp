#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "lgt/base_locus.hpp"
#include "lgt/git.hpp"

using namespace lgt;

namespace {

// Sum over points of multiplicity times the smallest weight on the support.
Rational chow_oracle(const WeightedCycle& W, const QVec& l, const TorusAction& A) {
  Rational s = 0;
  for (const auto& p : W.points) {
    std::optional<Rational> m;
    for (size_t i : p.support()) {
      Rational w = 0;
      for (size_t k = 0; k < l.size(); ++k) w += Rational(A.weights[i][k]) * l[k];
      if (!m || w < *m) m = w;
    }
    s += p.multiplicity * *m;
  }
  return s;
}

WeightedCycle s6_cycle() {
  BaseCycle bc = base_cycle(pencil_from_potential(builtin_potential("S6")));
  WeightedCycle W;
  for (const auto& bp : bc.points) W.points.push_back({bp.coordinates, bp.multiplicity, ""});
  return W;
}

TorusAction s6_action() { return TorusAction(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}); }

}  // namespace

TEST_CASE("torus weights from lattice points") {
  auto e = builtin_potential("S6");
  TorusAction A = weights_from_lattice(anticanonical_embedding(e.delta, e.labels).coordinates, 2);
  CHECK(A.weights == s6_action().weights);
  CHECK(A.form_string({-2, 1}) == "-2a + b");
}

TEST_CASE("limits and weights") {
  TorusAction A = s6_action();
  CyclePoint p1 = support_point(7, {1, 2});
  auto lw = limit_and_weight(p1, {1, 1}, A);
  CHECK(lw.support == std::vector<size_t>{1});
  CHECK(lw.weight == 1);
  auto z = limit_and_weight(p1, {0, 0}, A);
  CHECK(z.support == std::vector<size_t>{1, 2});
  CHECK(z.weight == 0);
  WeightedCycle W = s6_cycle();
  CHECK(chow_weight(W, {0, 0}, A) == 0);
  CHECK(chow_weight(W, {1, 1}, A) == -4);
}

TEST_CASE("chow weight properties on 1000 random cycles") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> w(-3, 3), mult(1, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    size_t r = 2 + size_t(trial % 2), n = 3 + size_t(rng() % 5);
    std::vector<IVec> weights(n, IVec(r));
    for (auto& v : weights)
      for (auto& x : v) x = w(rng);
    for (size_t j = 0; j < r; ++j) {  // normalize: forms sum to zero
      long t = 0;
      for (size_t i = 0; i + 1 < n; ++i) t += weights[i][j];
      weights[n - 1][j] = -t;
    }
    TorusAction A(r, weights);
    WeightedCycle W;
    size_t npts = 1 + rng() % 5;
    for (size_t k = 0; k < npts; ++k) {
      std::vector<size_t> supp;
      for (size_t i = 0; i < n; ++i)
        if (rng() % 2) supp.push_back(i);
      if (supp.empty()) supp.push_back(rng() % n);
      W.points.push_back(support_point(n, supp, Rational(mult(rng)) / (1 + int(rng() % 2))));
    }
    QVec l(r);
    for (auto& x : l) x = w(rng);
    Rational c = chow_weight(W, l, A);
    CHECK(c == chow_oracle(W, l, A));
    for (int k : {2, 3, 7}) {
      QVec kl = l;
      for (auto& x : kl) x *= k;
      CHECK(chow_weight(W, kl, A) == k * c);
    }
    QVec ml = l;
    for (auto& x : ml) x = -x;
    Rational s = c + chow_weight(W, ml, A);
    CHECK(s <= 0);
    bool flat = true;
    for (const auto& p : W.points) {
      std::set<Rational> vals;
      for (size_t i : p.support()) vals.insert(A.weight(i, l));
      flat = flat && vals.size() == 1;
    }
    CHECK((s == 0) == flat);
  }
}

TEST_CASE("chamber scans") {
  WeightedCycle W = s6_cycle();
  ChamberScan scan = chamber_scan(W, s6_action());
  CHECK(scan.verdict == Verdict::Stable);
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    QVec l{d(rng), d(rng)};
    if (l[0] == 0 && l[1] == 0) continue;
    CHECK(chow_weight(W, l, s6_action()) < 0);
  }
  // a single point is unstable
  WeightedCycle one{{W.points.front()}};
  CHECK(chamber_scan(one, s6_action()).verdict == Verdict::Unstable);
}

TEST_CASE("Pluecker coordinates of lines in P3") {
  TorusAction sl(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
  TorusAction PA = pluecker_action(sl);
  CHECK(PA.weights == std::vector<IVec>{{1, 1, 0}, {1, 0, 1}, {0, -1, -1}, {0, 1, 1}, {-1, 0, -1}, {-1, -1, 0}});
  WeightedCycle c0c3 = pluecker_cycle({{{1, 0, 0, 0}, {0, 1, 1, 1}}, {{0, 0, 0, 1}, {1, 1, 1, 0}}});
  CHECK(c0c3.points[0].support() == std::vector<size_t>{0, 1, 2});
  CHECK(c0c3.points[1].support() == std::vector<size_t>{2, 4, 5});
  WeightedCycle l3l4 = pluecker_cycle({{{1, 0, 0, 0}, {0, 0, 0, 1}}, {{0, 1, 0, 0}, {0, 0, 1, 0}}});
  CHECK(l3l4.points[0].support() == std::vector<size_t>{2});
  CHECK(l3l4.points[1].support() == std::vector<size_t>{3});
  CHECK(chamber_scan(l3l4, PA).verdict == Verdict::Polystable);
  // zero total weight with a limit outside the orbit
  auto s = chamber_scan(c0c3, PA);
  CHECK(s.verdict == Verdict::Semistable);
  CHECK(chow_weight(c0c3, {-1, -1, -1}, PA) == 0);
}

TEST_CASE("balancing on the P2 global quotient") {
  for (double a0 : {0.0, 0.5, 1.0, 2.0}) {
    CAPTURE(a0);
    CHECK(std::fabs(balance_solve(p2_quotient_points(a0)) - std::exp(a0 / 9)) <= 1e-9);
  }
  auto mu = moment_balance(p2_quotient_points(0), 1, 1);
  CHECK(std::fabs(mu[0]) < 1e-12);
  CHECK(std::fabs(mu[1]) < 1e-12);
}
