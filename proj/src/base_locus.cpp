#include "lgt/base_locus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "lgt/linalg.hpp"

namespace lgt {

UniPoly restrict_pencil(const Pencil& p, const BoundaryComponent& C) {
  std::vector<ParamScalar> c;
  for (size_t idx : C.coordinates) c.push_back(p.member.at(idx));
  return UniPoly(c);
}

ParamScalar LinearFactor::root() const {
  if (at_infinity()) throw std::domain_error("root at infinity");
  return -(beta / alpha);
}

namespace {

void push_unique(std::vector<ParamScalar>& v, const ParamScalar& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

std::vector<ParamScalar> candidate_roots(const UniPoly& g) {
  std::vector<ParamScalar> out;
  for (int j = 0; j < g.degree(); ++j)
    for (const auto& [m1, c1] : g[j].terms())
      for (const auto& [m2, c2] : g[j + 1].terms()) {
        ParamMonomial m = m1 * m2.inverse();
        push_unique(out, ParamScalar(m, -c1 / c2));
        push_unique(out, ParamScalar(m, -1));
        push_unique(out, ParamScalar(m, 1));
      }
  push_unique(out, ParamScalar(-1));
  push_unique(out, ParamScalar(1));
  return out;
}

void add_factor(std::vector<LinearFactor>& fs, const LinearFactor& f) {
  for (auto& g : fs)
    if (g.alpha == f.alpha && g.beta == f.beta) {
      g.multiplicity += f.multiplicity;
      return;
    }
  fs.push_back(f);
}

}  // namespace

UniFactorization factor_unipoly(const UniPoly& g, int projective_degree) {
  UniFactorization fz;
  if (g.is_zero()) {
    fz.remainder = g;
    return fz;
  }
  if (projective_degree >= 0 && projective_degree > g.degree())
    fz.factors.push_back({ParamScalar(), ParamScalar(1), projective_degree - g.degree()});
  UniPoly cur = g;
  int zeros = 0;
  while (cur[0].is_zero()) {
    cur = cur.shift_down();
    ++zeros;
  }
  if (zeros) fz.factors.push_back({ParamScalar(1), ParamScalar(), zeros});
  bool progress = true;
  while (progress && cur.degree() > 0) {
    progress = false;
    for (const auto& r : candidate_roots(cur)) {
      ParamScalar rem;
      UniPoly q = cur.divide_root(r, rem);
      if (!rem.is_zero()) continue;
      add_factor(fz.factors, {ParamScalar(1), -r, 1});
      cur = q;
      progress = true;
      break;
    }
  }
  fz.remainder = cur;
  return fz;
}

UniPoly reconstruct(const UniFactorization& fz) {
  UniPoly r = fz.remainder;
  for (const auto& f : fz.factors) {
    if (f.at_infinity()) continue;
    for (int k = 0; k < f.multiplicity; ++k) r = r * UniPoly::linear(f.alpha, f.beta);
  }
  return r;
}

long BaseCycle::total_multiplicity() const {
  long s = 0;
  for (const auto& p : points) s += p.multiplicity;
  for (const auto& c : curves) s += c.multiplicity;
  return s;
}

BaseCycle base_cycle(const Pencil& p) {
  BaseCycle bc;
  bc.rank = p.embedding.delta.rank();
  bc.components = boundary_components(p.embedding);
  const size_t N = p.embedding.coordinates.size();
  if (bc.rank == 2) {
    for (size_t ci = 0; ci < bc.components.size(); ++ci) {
      const auto& C = bc.components[ci];
      UniFactorization fz = factor_unipoly(restrict_pencil(p, C), C.degree());
      if (!fz.complete())
        bc.reports.push_back("component " + std::to_string(ci + 1) + ": unfactored remainder " + to_string(fz.remainder));
      for (const auto& f : fz.factors) {
        BasePoint bp;
        bp.component = ci;
        bp.multiplicity = f.multiplicity;
        bp.coordinates.assign(N, ParamScalar());
        if (f.at_infinity()) {
          bp.at_infinity = true;
          bp.coordinates[C.coordinates.back()] = 1;
        } else {
          bp.root = f.root();
          if (bp.root.is_zero()) {
            bp.coordinates[C.coordinates.front()] = 1;
          } else {
            for (size_t j = 0; j < C.coordinates.size(); ++j) bp.coordinates[C.coordinates[j]] = bp.root.pow(long(j));
          }
        }
        bc.points.push_back(std::move(bp));
      }
      bc.restrictions.push_back(std::move(fz));
    }
    return bc;
  }
  for (const auto& C : bc.components) {
    LaurentPoly r = face_restriction(p.potential, C.face);
    FacetFactorization ff = factor_heuristic(r);
    ff.facet = C.face;
    if (!(ff.remainder == LaurentPoly::constant(r.nvars(), 1)))
      bc.reports.push_back("facet " + to_string(C.face.normal) + ": unfactored part " + to_string(ff.remainder));
    for (const auto& [g, m] : ff.factors) bc.curves.push_back({C.face, g, m});
    if (!(ff.remainder == LaurentPoly::constant(r.nvars(), 1))) bc.curves.push_back({C.face, ff.remainder, 1});
    bc.facets.push_back(std::move(ff));
  }
  return bc;
}

// ---------------------------------------------------------------- Laurent division

namespace {

IVec min_exponents(const LaurentPoly& f) {
  IVec m = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms())
    for (size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

LaurentPoly shift(const LaurentPoly& f, const IVec& by) {
  LaurentPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) r.add_term(e + by, c);
  return r;
}

long width(const LaurentPoly& f, const IVec& u) {
  long lo = std::numeric_limits<long>::max(), hi = std::numeric_limits<long>::min();
  for (const auto& [e, c] : f.terms()) {
    long v = dot(u, e);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

std::vector<IVec> width_directions(size_t n) {
  std::vector<IVec> dirs;
  IVec u(n, -1);
  while (true) {
    bool nonzero = false, canonical = false;
    for (long x : u) {
      if (x != 0 && !nonzero) canonical = x > 0;
      nonzero = nonzero || x != 0;
    }
    if (nonzero && canonical) dirs.push_back(u);
    size_t i = 0;
    while (i < n && u[i] == 1) u[i++] = -1;
    if (i == n) break;
    ++u[i];
  }
  return dirs;
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero");
  if (f.is_zero()) return f;
  IVec mf = min_exponents(f), mg = min_exponents(g);
  LaurentPoly F = shift(f, -mf), G = shift(g, -mg);
  const auto& [lg, lc] = *G.terms().rbegin();
  if (!lc.is_unit()) return std::nullopt;
  ParamScalar lci = lc.inverse();
  LaurentPoly Q(f.nvars());
  while (!F.is_zero()) {
    const auto [le, fc] = *F.terms().rbegin();
    IVec d = le - lg;
    for (long x : d)
      if (x < 0) return std::nullopt;
    LaurentPoly t = LaurentPoly::monomial(d, fc * lci);
    Q += t;
    F = F - t * G;
  }
  return shift(Q, mf - mg);
}

FacetFactorization factor_heuristic(const LaurentPoly& f) {
  FacetFactorization out;
  out.restriction = f;
  const size_t n = f.nvars();
  const auto dirs = width_directions(n);
  auto fits = [&](const LaurentPoly& g, const LaurentPoly& cur) {
    for (const auto& u : dirs)
      if (width(g, u) > width(cur, u)) return false;
    return true;
  };
  std::vector<IVec> box2, box3;
  {
    IVec u(n, -3);
    while (true) {
      bool zero = std::all_of(u.begin(), u.end(), [](long x) { return x == 0; });
      bool small = std::all_of(u.begin(), u.end(), [](long x) { return std::labs(x) <= 2; });
      if (!zero) {
        box3.push_back(u);
        if (small) box2.push_back(u);
      }
      size_t i = 0;
      while (i < n && u[i] == 3) u[i++] = -3;
      if (i == n) break;
      ++u[i];
    }
  }
  auto l1 = [](const IVec& v) {
    long s = 0;
    for (long x : v) s += std::labs(x);
    return s;
  };
  std::stable_sort(box3.begin(), box3.end(), [&](const IVec& a, const IVec& b) { return l1(a) < l1(b); });
  std::stable_sort(box2.begin(), box2.end(), [&](const IVec& a, const IVec& b) { return l1(a) < l1(b); });

  LaurentPoly cur = f;
  IVec zero(n, 0);
  auto try_candidate = [&](const LaurentPoly& g) {
    if (cur.terms().size() < 2 || !fits(g, cur)) return;
    int m = 0;
    while (auto q = exact_divide(cur, g)) {
      cur = *q;
      ++m;
      if (cur.terms().size() < 2) break;
    }
    if (m) out.factors.emplace_back(g, m);
  };
  for (const auto& w : box3) {
    // 1 + c x^w and 1 + c x^{-w} differ by a unit; keep the lexicographically positive one
    if (w < zero) continue;
    for (long c : {1L, -1L}) try_candidate(LaurentPoly::monomial(zero) + LaurentPoly::monomial(w, c));
  }
  for (size_t a = 0; a < box2.size() && cur.terms().size() > 2; ++a)
    for (size_t b = a + 1; b < box2.size() && cur.terms().size() > 2; ++b)
      try_candidate(LaurentPoly::monomial(zero) + LaurentPoly::monomial(box2[a]) + LaurentPoly::monomial(box2[b]));
  if (cur.terms().size() == 1) {
    out.unit = cur;
    out.remainder = LaurentPoly::constant(n, 1);
  } else {
    out.unit = LaurentPoly::constant(n, 1);
    out.remainder = cur;
  }
  return out;
}

bool verify_facet_factorization(const LaurentPoly& f, const FaceDescriptor& facet,
                                const std::vector<LaurentPoly>& claimed, const LaurentPoly& unit) {
  LaurentPoly r;
  try {
    r = face_restriction(f, facet);
  } catch (const std::exception&) {
    return false;
  }
  LaurentPoly prod = unit;
  for (const auto& g : claimed) prod = prod * g;
  return prod == r;
}

// ---------------------------------------------------------------- coincidences

CoincidenceArrangement coincidence_arrangement(const BaseCycle& cycle) {
  CoincidenceArrangement arr;
  if (cycle.rank != 2) throw std::invalid_argument("coincidence_arrangement: rank 2 cycles only");
  const auto& P = cycle.points;
  for (size_t i = 0; i < P.size(); ++i) {
    if (P[i].at_infinity || P[i].root.is_zero()) continue;
    if (!P[i].root.is_unit()) {
      arr.warnings.push_back("point " + std::to_string(i + 1) + " has a non-monomial root; excluded");
      continue;
    }
    if (P[i].multiplicity > 1) arr.conditions.push_back({i, i, {}, true});
    for (size_t j = i + 1; j < P.size(); ++j) {
      if (P[j].component != P[i].component || P[j].at_infinity || !P[j].root.is_unit()) continue;
      const auto& [mi, ci] = *P[i].root.terms().begin();
      const auto& [mj, cj] = *P[j].root.terms().begin();
      if (ci != cj) {
        if (ci / cj > 0)
          arr.warnings.push_back("points " + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                 " differ by a positive constant; condition not affine-rational");
        continue;
      }
      size_t len = std::max(mi.exponent.size(), mj.exponent.size());
      QVec u(len, 0);
      for (size_t k = 0; k < len; ++k) u[k] = mi.at(k) - mj.at(k);
      bool zero = std::all_of(u.begin(), u.end(), [](const Rational& x) { return x == 0; });
      arr.conditions.push_back({i, j, u, zero});
    }
  }
  return arr;
}

double CoincidenceArrangement::distance(const std::vector<double>& a) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : conditions) {
    if (c.identical) return 0;
    double num = 0, den = 0;
    for (size_t k = 0; k < c.coefficients.size(); ++k) {
      double u = c.coefficients[k].get_d();
      num += u * (k < a.size() ? a[k] : 0.0);
      den += std::fabs(u);
    }
    best = std::min(best, std::fabs(num) / den);
  }
  return best;
}

std::string to_string(const CoincidenceCondition& c) {
  if (c.identical) return "identically satisfied";
  std::string out;
  for (size_t k = 0; k < c.coefficients.size(); ++k) {
    const Rational& u = c.coefficients[k];
    if (u == 0) continue;
    Rational au = abs(u);
    std::string term = (au == 1 ? "" : to_string(au) + "*") + "a" + std::to_string(k);
    if (out.empty()) out = (u < 0 ? "-" : "") + term;
    else out += (u < 0 ? " - " : " + ") + term;
  }
  return out + " = 0";
}

// ---------------------------------------------------------------- projective chart

std::vector<PlaneComponent> plane_components(const ChartPencil& cp) {
  std::vector<PlaneComponent> out;
  const size_t nz = cp.boundary.size();
  for (size_t i = 0; i < nz; ++i) {
    PlaneComponent pc;
    pc.hyperplane = i;
    pc.restriction = LaurentPoly(nz);
    for (const auto& [e, c] : cp.member.terms())
      if (e[i] == 0) pc.restriction.add_term(e, c);
    if (pc.restriction.is_zero()) continue;
    long d = 0;
    for (long x : pc.restriction.terms().begin()->first) d += x;
    for (size_t k = 0; k < nz && d > 0; ++k) {
      IVec pure(nz, 0);
      pure[k] = d;
      ParamScalar lead = pc.restriction.coeff(pure);
      if (lead.is_zero() || !lead.is_constant()) continue;
      QVec L(nz, 0);
      LaurentPoly lin(nz);
      for (size_t j = 0; j < nz; ++j) {
        IVec mono(nz, 0);
        mono[k] = d - 1;
        mono[j] += 1;
        ParamScalar cj = pc.restriction.coeff(mono);
        if (!cj.is_constant()) break;
        L[j] = j == k ? Rational(1) : Rational(cj.constant() / (lead.constant() * d));
        IVec ej(nz, 0);
        ej[j] = 1;
        if (L[j] != 0) lin.add_term(ej, L[j]);
      }
      if (lin.pow(d) * lead == pc.restriction) {
        pc.linear_form = L;
        pc.power = int(d);
      }
      break;
    }
    out.push_back(std::move(pc));
  }
  return out;
}

std::vector<Node> component_nodes(const std::vector<PlaneComponent>& comps, size_t nz) {
  std::vector<Node> out;
  for (size_t a = 0; a < comps.size(); ++a)
    for (size_t b = a + 1; b < comps.size(); ++b) {
      if (!comps[a].linear_form || !comps[b].linear_form) continue;
      QMat M;
      for (size_t h : {comps[a].hyperplane, comps[b].hyperplane}) {
        QVec row(nz, 0);
        row[h] = 1;
        M.push_back(row);
      }
      M.push_back(*comps[a].linear_form);
      M.push_back(*comps[b].linear_form);
      auto ns = nullspace(M, nz);
      if (ns.size() != 1) continue;
      QVec p = ns[0];
      Rational lead = 0;
      for (const auto& x : p)
        if (x != 0) {
          lead = x;
          break;
        }
      for (auto& x : p) x /= lead;
      out.push_back({comps[a].hyperplane, comps[b].hyperplane, p});
    }
  return out;
}

}  // namespace lgt
