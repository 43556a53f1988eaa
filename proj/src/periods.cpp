#include "lgt/periods.hpp"

#include <stdexcept>

namespace lgt {

namespace {

// Keeps the terms x^e of f^j that can still reach the constant term within
// `remaining` further multiplications: -e must lie in remaining * Newton(f).
struct Pruner {
  std::vector<Halfspace> facets;
  bool active = false;

  explicit Pruner(const LaurentPoly& f) {
    try {
      LatticePolytope P = f.newton_polytope();
      if (P.interior(IVec(f.nvars(), 0))) {
        facets = P.facets();
        active = true;
      }
    } catch (const std::exception&) {
      // lower-dimensional support: no pruning
    }
  }

  LaurentPoly prune(const LaurentPoly& g, long remaining) const {
    if (!active) return g;
    LaurentPoly out(g.nvars());
    for (const auto& [e, c] : g.terms()) {
      bool keep = true;
      for (const auto& h : facets)
        if (-dot(h.normal, e) > remaining * h.offset) {
          keep = false;
          break;
        }
      if (keep) out.add_term(e, c);
    }
    return out;
  }
};

ParamScalar pairing(const LaurentPoly& a, const LaurentPoly& b) {
  ParamScalar s;
  for (const auto& [e, c] : a.terms()) {
    auto it = b.terms().find(-e);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

}  // namespace

PowerSeries classical_period(const LaurentPoly& f, size_t N) {
  PowerSeries out(N);
  Pruner pr(f);
  const size_t top = (N + 1) / 2;
  std::vector<LaurentPoly> pw{LaurentPoly::constant(f.nvars(), 1)};
  for (size_t j = 1; j <= top; ++j) pw.push_back(pr.prune(pw.back() * f, long(N - j)));
  for (size_t k = 0; k <= N; ++k) out[k] = pairing(pw[(k + 1) / 2], pw[k / 2]);
  return out;
}

PeriodMatch period_match(const LaurentPoly& f, const LaurentPoly& g, size_t N, bool remove_constants) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("period_match: different numbers of variables");
  PeriodMatch m;
  LaurentPoly ff = f, gg = g;
  if (remove_constants) {
    m.shift_f = constant_term(f);
    m.shift_g = constant_term(g);
    ff = f - LaurentPoly::constant(f.nvars(), m.shift_f);
    gg = g - LaurentPoly::constant(g.nvars(), m.shift_g);
  }
  PowerSeries pf = classical_period(ff, N), pg = classical_period(gg, N);
  for (size_t k = 0; k <= N; ++k)
    if (!(pf[k] == pg[k])) {
      m.match = false;
      m.first_mismatch = k;
      break;
    }
  return m;
}

}  // namespace lgt
