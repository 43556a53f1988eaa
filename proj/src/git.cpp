#include "lgt/git.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lgt/linalg.hpp"

namespace lgt {

namespace {

Rational qdot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec qadd(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec qscale(const QVec& a, const Rational& c) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

QVec cross(const QVec& a, const QVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

// Positive multiple with coprime integer entries.
IVec primitive(const QVec& v) {
  mpz_class l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& q : v) {
    mpz_class x = q.get_num() * (l / q.get_den());
    z.push_back(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  IVec r;
  for (auto& x : z) {
    if (g != 0) x /= g;
    if (!x.fits_slong_p()) throw std::overflow_error("chamber_scan: sample out of range");
    r.push_back(x.get_si());
  }
  return r;
}

int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

std::vector<int> sign_vector(const std::vector<QVec>& normals, const QVec& v) {
  std::vector<int> s;
  for (const auto& n : normals) s.push_back(sgn(qdot(n, v)));
  return s;
}

// Sort vectors lying in a plane by angle, measured in the frame (u, v).
void sort_by_angle(std::vector<QVec>& rays, const QVec& u, const QVec& v) {
  auto angle = [&](const QVec& r) { return std::atan2(qdot(r, v).get_d(), qdot(r, u).get_d()); };
  std::sort(rays.begin(), rays.end(), [&](const QVec& a, const QVec& b) { return angle(a) < angle(b); });
}

std::vector<QVec> dedupe_rays(const std::vector<QVec>& rays) {
  std::set<IVec> seen;
  std::vector<QVec> out;
  for (const auto& r : rays) {
    if (is_zero(r)) continue;
    IVec p = primitive(r);
    if (seen.insert(p).second) out.push_back(to_qvec(p));
  }
  return out;
}

struct FaceSample {
  QVec y;
  int dim;
};

// Faces of an essential central arrangement in R^rho (rho <= 3), one sample each.
// Returns the samples and the rays (1-dimensional faces).
std::pair<std::vector<FaceSample>, std::vector<QVec>> essential_faces(const std::vector<QVec>& normals, size_t rho) {
  std::vector<FaceSample> samples;
  std::vector<QVec> rays;
  if (rho == 1) {
    rays = {QVec{1}, QVec{-1}};
    for (const auto& r : rays) samples.push_back({r, 1});
    return {samples, rays};
  }
  if (rho == 2) {
    std::vector<QVec> cand;
    for (const auto& n : normals) {
      cand.push_back({-n[1], n[0]});
      cand.push_back({n[1], -n[0]});
    }
    rays = dedupe_rays(cand);
    sort_by_angle(rays, {1, 0}, {0, 1});
    for (size_t i = 0; i < rays.size(); ++i) {
      samples.push_back({rays[i], 1});
      samples.push_back({qadd(rays[i], rays[(i + 1) % rays.size()]), 2});
    }
    return {samples, rays};
  }
  // rho == 3
  std::vector<QVec> cand;
  for (size_t i = 0; i < normals.size(); ++i)
    for (size_t j = i + 1; j < normals.size(); ++j) {
      QVec c = cross(normals[i], normals[j]);
      cand.push_back(c);
      cand.push_back(qscale(c, -1));
    }
  rays = dedupe_rays(cand);
  for (const auto& r : rays) samples.push_back({r, 1});
  for (const auto& n : normals) {
    std::vector<QVec> on;
    for (const auto& r : rays)
      if (qdot(r, n) == 0) on.push_back(r);
    QVec u = on.front();
    sort_by_angle(on, u, cross(n, u));
    for (size_t i = 0; i < on.size(); ++i) {
      QVec m = qadd(on[i], on[(i + 1) % on.size()]);
      samples.push_back({m, 2});
      Rational eps = 1;
      bool any = false;
      for (const auto& h : normals) {
        Rational hm = qdot(h, m), hn = qdot(h, n);
        if (hm == 0 || hn == 0) continue;
        Rational e = abs(hm) / (2 * abs(hn));
        if (!any || e < eps) eps = e;
        any = true;
      }
      samples.push_back({qadd(m, qscale(n, eps)), 3});
      samples.push_back({qadd(m, qscale(n, -eps)), 3});
    }
  }
  return {samples, rays};
}

std::vector<std::vector<size_t>> sorted_supports(const std::vector<std::vector<size_t>>& s) {
  auto r = s;
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

QVec to_qvec(const IVec& v) {
  QVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

TorusAction::TorusAction(size_t r, std::vector<IVec> w, std::vector<std::string> names)
    : rank(r), weights(std::move(w)), parameter_names(std::move(names)) {
  for (const auto& f : weights)
    if (f.size() != rank) throw std::invalid_argument("TorusAction: weight form of the wrong length");
  if (parameter_names.empty()) {
    static const char* defaults[] = {"a", "b", "c"};
    for (size_t i = 0; i < rank; ++i)
      parameter_names.push_back(rank <= 3 ? defaults[i] : "t" + std::to_string(i));
  }
  if (parameter_names.size() != rank) throw std::invalid_argument("TorusAction: one name per parameter");
}

bool TorusAction::normalized() const {
  IVec s(rank, 0);
  for (const auto& f : weights) s = s + f;
  return std::all_of(s.begin(), s.end(), [](long x) { return x == 0; });
}

Rational TorusAction::weight(size_t coord, const QVec& lambda) const {
  if (lambda.size() != rank) throw std::invalid_argument("1PS of the wrong rank");
  Rational s = 0;
  for (size_t i = 0; i < rank; ++i) s += weights.at(coord)[i] * lambda[i];
  return s;
}

std::string TorusAction::form_string(const QVec& form) const {
  std::string out;
  for (size_t i = 0; i < form.size(); ++i) {
    const Rational& c = form[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (a != 1) out += to_string(a);
    out += parameter_names[i];
  }
  return out.empty() ? "0" : out;
}

TorusAction weights_from_lattice(const std::vector<IVec>& points, size_t r) {
  for (const auto& p : points)
    if (p.size() != r) throw std::invalid_argument("weights_from_lattice: point of the wrong rank");
  return TorusAction(r, points);
}

std::vector<size_t> CyclePoint::support() const {
  std::vector<size_t> s;
  for (size_t i = 0; i < coordinates.size(); ++i)
    if (!coordinates[i].is_zero()) s.push_back(i);
  return s;
}

CyclePoint support_point(size_t ambient, const std::vector<size_t>& support, Rational multiplicity, std::string label) {
  CyclePoint p;
  p.coordinates.assign(ambient, ParamScalar());
  for (size_t i : support) p.coordinates.at(i) = ParamScalar(1);
  p.multiplicity = multiplicity;
  p.multiplicity.canonicalize();
  p.label = std::move(label);
  return p;
}

LimitWeight limit_and_weight(const CyclePoint& p, const QVec& lambda, const TorusAction& action) {
  if (p.coordinates.size() != action.weights.size())
    throw std::invalid_argument("limit_and_weight: point and action have different ambient dimension");
  auto s = p.support();
  if (s.empty()) throw std::invalid_argument("limit_and_weight: degenerate point (all coordinates zero)");
  LimitWeight lw;
  bool first = true;
  for (size_t i : s) {
    Rational w = action.weight(i, lambda);
    if (first || w < lw.weight) {
      lw.weight = w;
      lw.support.clear();
      first = false;
    }
    if (w == lw.weight) lw.support.push_back(i);
  }
  return lw;
}

Rational chow_weight(const WeightedCycle& cycle, const QVec& lambda, const TorusAction& action) {
  if (!action.normalized()) throw std::invalid_argument("chow_weight: action is not normalized");
  Rational w = 0;
  for (const auto& p : cycle.points) w += p.multiplicity * limit_and_weight(p, lambda, action).weight;
  return w;
}

QVec chow_form(const WeightedCycle& cycle, const QVec& lambda, const TorusAction& action) {
  QVec f(action.rank, 0);
  for (const auto& p : cycle.points) {
    size_t k = limit_and_weight(p, lambda, action).support.front();
    for (size_t i = 0; i < action.rank; ++i) f[i] += p.multiplicity * action.weights[k][i];
  }
  return f;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::Polystable: return "polystable";
    case Verdict::Semistable: return "semistable";
    default: return "unstable";
  }
}

std::vector<Chamber> ChamberScan::maximal() const {
  int top = 0;
  for (const auto& c : chambers) top = std::max(top, c.dim);
  std::vector<Chamber> out;
  for (const auto& c : chambers)
    if (c.dim == top) out.push_back(c);
  return out;
}

const Chamber* ChamberScan::locate(const QVec& lambda) const {
  std::vector<QVec> normals;
  for (const auto& h : hyperplanes) normals.push_back(to_qvec(h));
  auto s = sign_vector(normals, lambda);
  for (const auto& c : chambers)
    if (c.signs == s) return &c;
  return nullptr;
}

ChamberScan chamber_scan(const WeightedCycle& cycle, const TorusAction& action) {
  const size_t r = action.rank;
  if (r == 0 || r > 3) throw std::invalid_argument("chamber_scan: torus rank must be 1, 2 or 3");
  if (!action.normalized()) throw std::invalid_argument("chamber_scan: action is not normalized");
  ChamberScan scan;

  std::set<IVec> seen;
  for (const auto& p : cycle.points) {
    auto s = p.support();
    if (s.empty()) throw std::invalid_argument("chamber_scan: degenerate point (all coordinates zero)");
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j) {
        IVec d = action.weights[s[i]] - action.weights[s[j]];
        if (std::all_of(d.begin(), d.end(), [](long x) { return x == 0; })) continue;
        IVec n = primitive(to_qvec(d));
        if (n < -n) n = -n;  // one orientation per hyperplane
        if (seen.insert(n).second) scan.hyperplanes.push_back(n);
      }
  }
  std::sort(scan.hyperplanes.begin(), scan.hyperplanes.end());
  std::vector<QVec> normals;
  for (const auto& h : scan.hyperplanes) normals.push_back(to_qvec(h));

  // Split R^r into the row space V of the normals and the lineality space L.
  QMat rows = normals;
  std::vector<QVec> basis;
  if (!rows.empty()) {
    auto piv = rref(rows);
    for (size_t i = 0; i < piv.size(); ++i) basis.push_back(rows[i]);
  }
  const size_t rho = basis.size();
  std::vector<QVec> lineality = nullspace(normals, r);

  auto lift = [&](const QVec& y) {
    QVec v(r, 0);
    for (size_t j = 0; j < rho; ++j) v = qadd(v, qscale(basis[j], y[j]));
    return v;
  };

  std::vector<FaceSample> samples;
  std::vector<QVec> generators;
  if (rho == 0) {
    samples.push_back({lineality.front(), 0});
  } else {
    std::vector<QVec> reduced;
    for (const auto& n : normals) {
      QVec m(rho);
      for (size_t j = 0; j < rho; ++j) m[j] = qdot(n, basis[j]);
      reduced.push_back(m);
    }
    auto [ys, rays] = essential_faces(reduced, rho);
    for (const auto& s : ys) samples.push_back({lift(s.y), s.dim});
    for (const auto& y : rays) generators.push_back(lift(y));
  }
  for (const auto& k : lineality) {
    generators.push_back(k);
    generators.push_back(qscale(k, -1));
  }

  std::map<std::vector<int>, Chamber> faces;
  for (const auto& s : samples) {
    auto sv = sign_vector(normals, s.y);
    if (faces.count(sv)) continue;
    Chamber c;
    c.dim = s.dim + int(lineality.size());
    c.signs = sv;
    c.sample = primitive(s.y);
    QVec lam = to_qvec(c.sample);
    for (const auto& p : cycle.points) c.limit.push_back(limit_and_weight(p, lam, action).support);
    c.chow_form = chow_form(cycle, lam, action);
    faces.emplace(sv, std::move(c));
  }

  std::vector<std::vector<size_t>> original;
  for (const auto& p : cycle.points) original.push_back(p.support());
  original = sorted_supports(original);

  bool all_negative = true, any_positive = false;
  IVec zero_mover;
  for (const auto& g : generators) {
    Rational w = chow_weight(cycle, g, action);
    if (w >= 0) all_negative = false;
    if (w > 0 && !any_positive) {
      any_positive = true;
      scan.witness = primitive(g);
    }
    if (w == 0 && zero_mover.empty()) {
      std::vector<std::vector<size_t>> lim;
      for (const auto& p : cycle.points) lim.push_back(limit_and_weight(p, g, action).support);
      if (sorted_supports(lim) != original) zero_mover = primitive(g);
    }
  }

  for (auto& [sv, c] : faces) {
    bool neg = true, pos = false;
    for (const auto& g : generators) {
      auto gs = sign_vector(normals, g);
      bool in_closure = true;
      for (size_t i = 0; i < sv.size(); ++i)
        if (gs[i] != 0 && gs[i] != sv[i]) in_closure = false;
      if (!in_closure) continue;
      c.generators.push_back(primitive(g));
      Rational w = qdot(c.chow_form, g);
      if (w >= 0) neg = false;
      if (w > 0) pos = true;
    }
    c.sign = pos ? 1 : (neg ? -1 : 0);
    scan.chambers.push_back(c);
  }
  std::stable_sort(scan.chambers.begin(), scan.chambers.end(),
                   [](const Chamber& a, const Chamber& b) { return std::tie(a.dim, a.signs) < std::tie(b.dim, b.signs); });

  if (all_negative && !generators.empty()) {
    scan.verdict = Verdict::Stable;
    scan.reason = "Chow weight negative on every nonzero 1PS";
  } else if (any_positive) {
    scan.verdict = Verdict::Unstable;
    scan.reason = "positive Chow weight at " + to_string(scan.witness);
  } else if (!zero_mover.empty()) {
    scan.verdict = Verdict::Semistable;
    scan.witness = zero_mover;
    scan.reason = "zero Chow weight at " + to_string(zero_mover) + " with a different limit cycle";
  } else {
    scan.verdict = Verdict::Polystable;
    scan.reason = "Chow weight nonpositive; zero only on 1PS fixing the cycle";
  }
  return scan;
}

std::string inequality_string(const ChamberScan& scan, const Chamber& c, const TorusAction& action) {
  std::string out;
  for (size_t i = 0; i < scan.hyperplanes.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += action.form_string(to_qvec(scan.hyperplanes[i]));
    out += c.signs[i] > 0 ? " > 0" : (c.signs[i] < 0 ? " < 0" : " = 0");
  }
  return out;
}

WeightedCycle pluecker_cycle(const std::vector<std::pair<QVec, QVec>>& lines) {
  WeightedCycle cyc;
  for (const auto& [p, q] : lines) {
    if (p.size() != q.size()) throw std::invalid_argument("pluecker_cycle: points of different length");
    CyclePoint pt;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j) pt.coordinates.emplace_back(p[i] * q[j] - p[j] * q[i]);
    if (pt.support().empty()) throw std::invalid_argument("pluecker_cycle: the two points are dependent");
    cyc.points.push_back(std::move(pt));
  }
  return cyc;
}

TorusAction pluecker_action(const TorusAction& action) {
  std::vector<IVec> w;
  for (size_t i = 0; i < action.weights.size(); ++i)
    for (size_t j = i + 1; j < action.weights.size(); ++j) w.push_back(action.weights[i] + action.weights[j]);
  return TorusAction(action.rank, w, action.parameter_names);
}

std::array<double, 2> moment_balance(const std::vector<std::array<std::complex<double>, 3>>& points, double lambda,
                                     double nu) {
  if (!(lambda > 0) || !(nu > 0)) throw std::invalid_argument("moment_balance: torus parameters must be positive");
  std::array<double, 2> mu{0, 0};
  for (const auto& z : points) {
    double n0 = std::norm(lambda * z[0]), n1 = std::norm(nu / lambda * z[1]), n2 = std::norm(z[2] / nu);
    double s = n0 + n1 + n2;
    if (s == 0) throw std::invalid_argument("moment_balance: degenerate point");
    double phi1 = 1.0 / 3 - n0 / s, phi2 = 1.0 / 3 - n2 / s;
    mu[0] += -3 * (phi1 + 2 * phi2);
    mu[1] += -3 * (2 * phi1 + phi2);
  }
  return mu;
}

double balance_solve(const std::vector<std::array<std::complex<double>, 3>>& points) {
  auto f = [&](double t) {
    double l = std::exp(t);
    return moment_balance(points, l, l * l)[0];
  };
  double lo = -10, hi = 10;
  double flo = f(lo), fhi = f(hi);
  if (std::signbit(flo) == std::signbit(fhi) || flo == 0 || fhi == 0) {
    if (flo == 0) return std::exp(lo);
    if (fhi == 0) return std::exp(hi);
    throw std::runtime_error("balance_solve: no sign change along nu = lambda^2");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = 0.5 * (lo + hi), fm = f(mid);
    if (fm == 0) return std::exp(mid);
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

std::vector<std::array<std::complex<double>, 3>> p2_quotient_points(double a0) {
  const std::complex<double> xi = -1.0, e = xi * std::exp(a0 / 3);
  return {{0.0, 1.0, e}, {1.0, 0.0, e}, {1.0, xi, 0.0}};
}

}  // namespace lgt
