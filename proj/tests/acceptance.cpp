// Acceptance report: one line per criterion, checked literally against the
// printed values. With --expect-errata the exit code is 0 when every failed
// check is a pinned erratum (printed value contradicted by the printed
// data, recomputed value equal to the correction); otherwise 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lgt/adiabatic.hpp"
#include "lgt/base_locus.hpp"
#include "lgt/catalog.hpp"
#include "lgt/git.hpp"
#include "lgt/periods.hpp"
#include "lgt/potentials.hpp"
#include "lgt/verify.hpp"

using namespace lgt;

namespace {

struct Line {
  int n;
  std::string title;
  bool pass = true;
  bool errata_only = true;  // every failure is a pinned erratum
  double seconds = 0;
  double budget = 0;  // 0: no limit
  std::string detail;
  std::string analysis;
};

double timed(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool has_prefix(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

// Fixtures of the suite whose id starts with one of the prefixes.
struct Selection {
  size_t total = 0, printed_ok = 0;
  std::vector<std::string> errata, broken;
};

Selection select(const SuiteReport& r, const std::vector<std::string>& prefixes) {
  Selection s;
  for (const auto& f : r.fixtures) {
    if (std::none_of(prefixes.begin(), prefixes.end(), [&](const std::string& p) { return has_prefix(f.id, p); }))
      continue;
    ++s.total;
    if (f.pass && f.erratum.empty()) ++s.printed_ok;
    else if (f.pass) s.errata.push_back(f.id);
    else s.broken.push_back(f.id);
  }
  return s;
}

void apply(Line& L, const Selection& s, const std::string& what, const std::string& analysis) {
  L.detail = std::to_string(s.printed_ok) + "/" + std::to_string(s.total) + " " + what + " reproduced as printed";
  if (!s.errata.empty() || !s.broken.empty()) L.pass = false;
  if (!s.broken.empty()) {
    L.errata_only = false;
    L.detail += "; unexplained: ";
    for (size_t i = 0; i < s.broken.size(); ++i) L.detail += (i ? ", " : "") + s.broken[i];
  }
  if (!s.errata.empty()) {
    L.detail += "; printed value not reproduced: ";
    for (size_t i = 0; i < s.errata.size(); ++i) L.detail += (i ? ", " : "") + s.errata[i];
    L.analysis = analysis;
  }
}

SuiteReport run_tags(const std::vector<std::string>& tags, double& seconds) {
  SuiteReport all;
  seconds = timed([&] {
    for (const auto& t : tags) {
      auto r = verify_paper_suite(t);
      all.fixtures.insert(all.fixtures.end(), r.fixtures.begin(), r.fixtures.end());
    }
  });
  return all;
}

Line c1() {
  Line L{1, "duality"};
  L.budget = 1;
  bool ok = true;
  L.seconds = timed([&] {
    ok = ok && lattice_equivalent(*polar_dual(catalog("P3")).polytope, catalog("P9"));
    ok = ok && lattice_equivalent(*polar_dual(catalog("P6a")).polytope, catalog("P6a"));
    for (const auto& n : polygon_names()) {
      auto d = polar_dual(catalog(n));
      ok = ok && d.polytope && polar_dual(*d.polytope).polytope == catalog(n);
    }
  });
  L.pass = ok;
  L.errata_only = ok;
  L.detail = "P3 dual ~ P9, P6a self-dual, involution on " + std::to_string(polygon_names().size()) + " polygons";
  return L;
}

Line c2() {
  Line L{2, "base loci"};
  L.budget = 5;
  auto r = run_tags({"P2", "S3", "S6", "S4", "P8a"}, L.seconds);
  apply(L, select(r, {"P2.points.", "S3.points.", "S6.points.", "S4.points.", "P8a.points."}), "base points",
        "every computed point is a root of the pencil restricted to its boundary component and satisfies the "
        "binomial relations; the printed points have sign-flipped exponents (S3 p3,p4,p5,p7,p8), a missing minus sign (S4 p1), "
        "a dropped a0 "
        "(S6 p6), or coefficients of a different boundary component (S4 p4,p5; P8a p5-p8), matching printed "
        "restriction factorizations that the printed potentials do not produce");
  return L;
}

Line c3() {
  Line L{3, "degree conservation"};
  size_t n = 0;
  L.seconds = timed([&] {
    for (const auto& id : potential_ids()) {
      auto e = builtin_potential(id);
      if (e.delta.rank() != 2) continue;
      ++n;
      if (base_cycle(pencil_from_potential(e)).total_multiplicity() != normalized_volume(e.delta)) {
        L.pass = false;
        L.errata_only = false;
        L.detail += id + " ";
      }
    }
  });
  L.detail = L.pass ? "sum of multiplicities = normalized volume for " + std::to_string(n) + " surface entries"
                    : "mismatch: " + L.detail;
  return L;
}

Line c4() {
  Line L{4, "chamber tables"};
  L.budget = 10;
  auto r = run_tags({"P2", "S6", "P4b"}, L.seconds);
  apply(L, select(r, {"P2.table", "P2.verdict", "S6.table", "S6.verdict", "P4b.weighted"}), "table rows",
        "S6 rows (a<0,b<0) and (a<0,b>0,a+b>0): limits as printed, but Ch = 2a+2b and -2b on every 1PS of the "
        "cone, which is the sum of the weights of the printed limits; the printed 2b and -b are not");
  return L;
}

Line c5() {
  Line L{5, "boundary-corrected potentials"};
  auto r = run_tags({"S3", "S4"}, L.seconds);
  apply(L, select(r, {"S3.potential", "S3.binomial", "S4.potential", "S4.binomial"}), "potential checks", "");
  return L;
}

Line c6() {
  Line L{6, "threefold facet data"};
  auto r = run_tags({"D22", "V10", "V8", "V4"}, L.seconds);
  apply(L, select(r, {"D22.facets", "V10.facets", "V8.alt.", "V4.components", "V4.nodes"}), "facet checks",
        "V10 f0 and f3 as printed are not facet sums of the printed V10 potential (a term of a neighbouring facet "
        "in f0, a repeated y^-1 z in f3); the corrected sums match facets (-1,0,1) and (-1,-1,0)");
  return L;
}

Line c7() {
  Line L{7, "Pluecker stability"};
  auto r = run_tags({"V4"}, L.seconds);
  apply(L, select(r, {"V4.pluecker"}), "Pluecker checks",
        "C0' + C3' is strictly semistable, not stable: the 1PS (a,b,c,d) = (-1,-1,-1,3) gives weights "
        "min(-2,-2,2) + min(2,2,2) = 0 and moves the cycle to a limit outside its orbit; the printed argument "
        "makes one Pluecker point negative at a time instead of bounding the sum");
  return L;
}

Line c8() {
  Line L{8, "balancing"};
  L.budget = 1;
  double worst = 0;
  std::array<double, 2> mu{};
  L.seconds = timed([&] {
    for (double a0 : {0.0, 0.5, 1.0, 2.0})
      worst = std::max(worst, std::fabs(balance_solve(p2_quotient_points(a0)) - std::exp(a0 / 9)));
    mu = moment_balance(p2_quotient_points(0), 1, 1);
  });
  L.pass = worst <= 1e-9 && std::fabs(mu[0]) < 1e-12 && std::fabs(mu[1]) < 1e-12;
  L.errata_only = L.pass;
  char buf[160];
  std::snprintf(buf, sizeof buf, "max | |lambda| - e^{a0/9} | = %.2e over a0 in {0,1/2,1,2}; sum mu = 0 at identity",
                worst);
  L.detail = buf;
  return L;
}

Line c9() {
  Line L{9, "adiabatic verdicts"};
  L.seconds = timed([&] {
    FibrationSummary q{{FiberDatum::snc(4)}, 1, true};
    auto r = verdict(q);
    bool a = r.verdict == AdiabaticVerdict::Unstable && r.max_a == Rational(3, 4) && r.threshold == Rational(1, 2);
    bool b = rule_verdict({FiberDatum::kodaira("I1"), FiberDatum::kodaira("I3"), FiberDatum::kodaira("IV*")})
                 .verdict == AdiabaticVerdict::Unstable;
    bool c = rule_verdict(std::vector<FiberDatum>(12, FiberDatum::kodaira("I1"))).verdict ==
             AdiabaticVerdict::StableForLargeParameter;
    L.pass = a && b && c;
  });
  L.errata_only = L.pass;
  L.detail = "quartic unstable (a_P = 3/4 > 1/2); I1, I3, IV* unstable; only I_N stable for large parameter";
  return L;
}

mpz_class fact(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Line c10() {
  Line L{10, "periods"};
  L.budget = 60;
  bool seq = true, v8 = true, newton = true;
  L.seconds = timed([&] {
    PowerSeries p = classical_period(builtin_potential("P2", false).potential, 9);
    for (unsigned long d = 0; d <= 3; ++d)
      seq = seq && p[3 * d] == ParamScalar(Rational(fact(3 * d) / (fact(d) * fact(d) * fact(d))));
    v8 = period_match(builtin_potential("V8-cube", false).potential, builtin_potential("V8-alt", false).potential, 8)
             .match;
    for (const auto& id : potential_ids()) newton = newton && newton_check(builtin_potential(id));
  });
  L.pass = seq && v8 && newton;
  L.errata_only = L.pass;
  L.detail = std::string("P2 c_{3d} = 1, 6, 90, 1680: ") + (seq ? "yes" : "no") + "; V8 potentials agree to order 8: " +
             (v8 ? "yes" : "no") + "; newton_check on all entries: " + (newton ? "yes" : "no");
  return L;
}

Line c11() {
  Line L{11, "property suites"};
  L.budget = 30;
  size_t bad = 0, restrictions = 0;
  L.seconds = timed([&] {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> w(-3, 3);
    for (int trial = 0; trial < 1000; ++trial) {
      size_t r = 2 + size_t(trial % 2), n = 3 + size_t(rng() % 5);
      std::vector<IVec> weights(n, IVec(r));
      for (auto& v : weights)
        for (auto& x : v) x = w(rng);
      for (size_t j = 0; j < r; ++j) {
        long t = 0;
        for (size_t i = 0; i + 1 < n; ++i) t += weights[i][j];
        weights[n - 1][j] = -t;
      }
      TorusAction A(r, weights);
      WeightedCycle W;
      for (size_t k = 0, np = 1 + rng() % 5; k < np; ++k) {
        std::vector<size_t> supp;
        for (size_t i = 0; i < n; ++i)
          if (rng() % 2) supp.push_back(i);
        if (supp.empty()) supp.push_back(rng() % n);
        W.points.push_back(support_point(n, supp, 1 + long(rng() % 3)));
      }
      QVec l(r), k2(r), m(r);
      for (size_t i = 0; i < r; ++i) l[i] = w(rng), k2[i] = 2 * l[i], m[i] = -l[i];
      Rational c = chow_weight(W, l, A);
      if (chow_weight(W, k2, A) != 2 * c || c + chow_weight(W, m, A) > 0) ++bad;
    }
    for (const auto& id : potential_ids()) {
      auto e = builtin_potential(id);
      if (e.delta.rank() != 2) continue;
      Pencil p = pencil_from_potential(e);
      for (const auto& C : boundary_components(p.embedding)) {
        UniPoly g = restrict_pencil(p, C);
        ++restrictions;
        if (!(reconstruct(factor_unipoly(g, C.degree())) == g)) ++bad;
      }
    }
    auto ids = potential_ids();
    std::uniform_int_distribution<int> sm(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
      auto e = builtin_potential(ids[size_t(trial) % ids.size()]);
      auto fs = faces(e.potential.newton_polytope(), trial % int(e.potential.nvars()));
      const auto& F = fs[rng() % fs.size()];
      QMat M(e.parameter_names.size(), QVec(2));
      for (auto& row : M)
        for (auto& x : row) x = sm(rng);
      if (!(face_restriction(substitute_params(e.potential, M), F) ==
            substitute_params(face_restriction(e.potential, F), M)))
        ++bad;
    }
  });
  L.pass = bad == 0;
  L.errata_only = L.pass;
  L.detail = "1000 random cycles, " + std::to_string(restrictions) + " restrictions, 100 random faces; " +
             std::to_string(bad) + " violations";
  return L;
}

}  // namespace

int main(int argc, char** argv) {
  bool expect_errata = argc > 1 && std::strcmp(argv[1], "--expect-errata") == 0;
  std::vector<Line> lines;
  for (auto f : {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11}) {
    Line L;
    try {
      L = f();
    } catch (const std::exception& e) {
      L.pass = false;
      L.errata_only = false;
      L.detail = std::string("error: ") + e.what();
    }
    if (L.budget > 0 && L.seconds > L.budget) {
      L.pass = false;
      L.errata_only = false;
      L.detail += "; over the time budget";
    }
    lines.push_back(L);
  }
  bool all = true, explained = true;
  for (size_t i = 0; i < lines.size(); ++i) {
    auto& L = lines[i];
    L.n = int(i + 1);
    char t[64];
    std::snprintf(t, sizeof t, "%.2f s", L.seconds);
    std::cout << (L.pass ? "PASS" : "FAIL") << "  " << L.n << ". " << L.title << ": " << L.detail << " (" << t;
    if (L.budget > 0) std::cout << ", budget " << L.budget << " s";
    std::cout << ")\n";
    if (!L.analysis.empty()) std::cout << "      analysis: " << L.analysis << "\n";
    all = all && L.pass;
    explained = explained && (L.pass || L.errata_only);
  }
  size_t passed = size_t(std::count_if(lines.begin(), lines.end(), [](const Line& L) { return L.pass; }));
  std::cout << passed << "/" << lines.size() << " criteria pass";
  if (!all) std::cout << (explained ? "; every failure is a pinned erratum" : "; some failures are unexplained");
  std::cout << "\n";
  return expect_errata ? (explained ? 0 : 1) : (all ? 0 : 1);
}
