#include "lgt/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lgt/linalg.hpp"

namespace lgt {

IVec operator+(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IVec operator-(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IVec operator-(const IVec& a) {
  IVec r(a);
  for (auto& x : r) x = -x;
  return r;
}

long dot(const IVec& a, const IVec& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

namespace {

IVec primitive(IVec v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::labs(x));
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IVec cross(const IVec& a, const IVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

QMat to_qmat(const std::vector<IVec>& rows) {
  QMat m;
  for (const auto& r : rows) {
    QVec q;
    for (long x : r) q.emplace_back(x);
    m.push_back(std::move(q));
  }
  return m;
}

size_t affine_rank(const std::vector<IVec>& pts) {
  if (pts.size() < 2) return 0;
  std::vector<IVec> d;
  for (size_t i = 1; i < pts.size(); ++i) d.push_back(pts[i] - pts[0]);
  return lgt::rank(to_qmat(d));
}

// Orders coplanar points counterclockwise around their centroid as seen from
// the side the normal points to; the 2D case uses normal (0,0,1) implicitly.
std::vector<IVec> cyclic_order(std::vector<IVec> pts, const IVec& normal) {
  const size_t n = pts[0].size();
  std::vector<double> c(n, 0.0);
  for (const auto& p : pts)
    for (size_t i = 0; i < n; ++i) c[i] += double(p[i]) / pts.size();
  size_t drop = n;  // coordinate projected away
  int sign = 1;
  if (n == 3) {
    drop = 0;
    for (size_t i = 1; i < 3; ++i)
      if (std::labs(normal[i]) > std::labs(normal[drop])) drop = i;
    // projecting along e_drop flips orientation depending on sign and parity
    sign = (normal[drop] > 0) ? 1 : -1;
    if (drop == 1) sign = -sign;
  }
  auto angle = [&](const IVec& p) {
    std::vector<double> q;
    for (size_t i = 0; i < n; ++i)
      if (i != drop) q.push_back(double(p[i]) - c[i]);
    return std::atan2(sign * q[1], q[0]);
  };
  std::sort(pts.begin(), pts.end(), [&](const IVec& a, const IVec& b) { return angle(a) < angle(b); });
  return pts;
}

long idet(const std::vector<IVec>& rows) {
  if (rows.size() == 2) return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
  return dot(rows[0], cross(rows[1], rows[2]));
}

Rational qdet(const std::vector<QVec>& r) {
  if (r.size() == 2) return r[0][0] * r[1][1] - r[0][1] * r[1][0];
  return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
         r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
         r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

}  // namespace

LatticePolytope::LatticePolytope(std::vector<IVec> points, std::string name) : name_(std::move(name)) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const size_t n = points[0].size();
  for (const auto& p : points)
    if (p.size() != n) throw std::invalid_argument("mixed ranks");
  if (n != 2 && n != 3) throw std::invalid_argument("only ranks 2 and 3 are supported");
  if (affine_rank(points) != n) throw std::invalid_argument("polytope is not full-dimensional");
  rank_ = int(n);

  std::set<IVec> seen;
  auto try_normal = [&](IVec nrm, const IVec& base) {
    bool zero = std::all_of(nrm.begin(), nrm.end(), [](long x) { return x == 0; });
    if (zero) return;
    nrm = primitive(nrm);
    long c = dot(nrm, base);
    bool le = true, ge = true;
    for (const auto& p : points) {
      long v = dot(nrm, p);
      le = le && v <= c;
      ge = ge && v >= c;
    }
    if (!le && !ge) return;
    if (!le) {
      nrm = -nrm;
      c = -c;
    }
    if (seen.insert(nrm).second) facets_.push_back({nrm, c});
  };
  const size_t m = points.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      IVec d = points[j] - points[i];
      if (n == 2) {
        try_normal({d[1], -d[0]}, points[i]);
        continue;
      }
      for (size_t k = j + 1; k < m; ++k) try_normal(cross(d, points[k] - points[i]), points[i]);
    }
  std::sort(facets_.begin(), facets_.end(),
            [](const Halfspace& a, const Halfspace& b) { return a.normal < b.normal; });

  for (const auto& p : points) {
    std::vector<IVec> active;
    for (const auto& f : facets_)
      if (dot(f.normal, p) == f.offset) active.push_back(f.normal);
    if (!active.empty() && lgt::rank(to_qmat(active)) == n) vertices_.push_back(p);
  }
  if (n == 2) {
    // cyclic_order gives counterclockwise; reverse for clockwise and rotate so
    // that the lexicographically smallest vertex comes first
    vertices_ = cyclic_order(vertices_, {});
    std::reverse(vertices_.begin(), vertices_.end());
    std::rotate(vertices_.begin(), std::min_element(vertices_.begin(), vertices_.end()), vertices_.end());
  }
}

bool LatticePolytope::contains(const IVec& p) const {
  for (const auto& f : facets_)
    if (dot(f.normal, p) > f.offset) return false;
  return true;
}

bool LatticePolytope::interior(const IVec& p) const {
  for (const auto& f : facets_)
    if (dot(f.normal, p) >= f.offset) return false;
  return true;
}

bool LatticePolytope::operator==(const LatticePolytope& o) const {
  auto a = vertices_, b = o.vertices_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<IVec> lattice_points(const LatticePolytope& P) {
  const int n = P.rank();
  IVec lo(P.vertices()[0]), hi(P.vertices()[0]);
  for (const auto& v : P.vertices())
    for (int i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::vector<IVec> out;
  IVec p(lo);
  while (true) {
    if (P.contains(p)) out.push_back(p);
    int i = n - 1;
    while (i >= 0 && p[i] == hi[i]) p[i] = lo[i], --i;
    if (i < 0) break;
    ++p[i];
  }
  return out;
}

std::vector<IVec> boundary_points(const LatticePolytope& P) {
  std::vector<IVec> out;
  for (auto& p : lattice_points(P))
    if (!P.interior(p)) out.push_back(p);
  return out;
}

DualResult polar_dual(const LatticePolytope& P) {
  IVec origin(P.rank(), 0);
  if (!P.interior(origin)) throw std::invalid_argument("origin is not an interior point");
  DualResult r;
  r.is_lattice = true;
  std::vector<IVec> ivs;
  for (const auto& f : P.facets()) {
    QVec u;
    for (long x : f.normal) u.push_back(Rational(-x, f.offset));
    for (auto& q : u) q.canonicalize();
    if (f.offset != 1) r.is_lattice = false;
    ivs.push_back(-f.normal);
    r.vertices.push_back(std::move(u));
  }
  if (r.is_lattice) {
    r.polytope = LatticePolytope(ivs);
    if (!P.name().empty()) r.polytope->set_name(P.name() + "^dual");
  }
  return r;
}

bool is_reflexive(const LatticePolytope& P) {
  IVec origin(P.rank(), 0);
  if (!P.interior(origin)) return false;
  for (const auto& f : P.facets())
    if (f.offset != 1) return false;
  return true;
}

namespace {

// Simplices (as vertex lists) of a fan triangulation from an interior point c.
template <class F>
void fan_simplices(const LatticePolytope& P, const QVec& c, F&& emit) {
  const int n = P.rank();
  auto q = [](const IVec& v) {
    QVec r;
    for (long x : v) r.emplace_back(x);
    return r;
  };
  if (n == 2) {
    const auto& V = P.vertices();
    for (size_t i = 0; i < V.size(); ++i) emit(std::vector<QVec>{c, q(V[i]), q(V[(i + 1) % V.size()])});
    return;
  }
  for (const auto& f : P.facets()) {
    std::vector<IVec> fv;
    for (const auto& v : P.vertices())
      if (dot(f.normal, v) == f.offset) fv.push_back(v);
    fv = cyclic_order(fv, f.normal);
    for (size_t i = 1; i + 1 < fv.size(); ++i) emit(std::vector<QVec>{c, q(fv[0]), q(fv[i]), q(fv[i + 1])});
  }
}

QVec vertex_mean(const LatticePolytope& P) {
  QVec c(P.rank(), 0);
  for (const auto& v : P.vertices())
    for (int i = 0; i < P.rank(); ++i) c[i] += v[i];
  for (auto& x : c) x /= Rational(long(P.vertices().size()));
  return c;
}

Rational simplex_det(const std::vector<QVec>& s) {
  std::vector<QVec> rows;
  for (size_t i = 1; i < s.size(); ++i) {
    QVec r(s[i]);
    for (size_t k = 0; k < r.size(); ++k) r[k] -= s[0][k];
    rows.push_back(r);
  }
  Rational d = qdet(rows);
  return d < 0 ? Rational(-d) : d;
}

}  // namespace

QVec barycenter(const LatticePolytope& P) {
  const int n = P.rank();
  QVec acc(n, 0);
  Rational total = 0;
  fan_simplices(P, vertex_mean(P), [&](const std::vector<QVec>& s) {
    Rational w = simplex_det(s);
    total += w;
    for (int i = 0; i < n; ++i) {
      Rational m = 0;
      for (const auto& p : s) m += p[i];
      acc[i] += w * m / Rational(long(s.size()));
    }
  });
  for (auto& x : acc) x /= total;
  return acc;
}

long normalized_volume(const LatticePolytope& P) {
  Rational total = 0;
  fan_simplices(P, vertex_mean(P), [&](const std::vector<QVec>& s) { total += simplex_det(s); });
  if (!is_integer(total)) throw std::logic_error("non-integral normalized volume");
  return total.get_num().get_si();
}

namespace {

std::vector<IVec> segment_points(const IVec& a, const IVec& b) {
  IVec d = b - a;
  long g = 0;
  for (long x : d) g = std::gcd(g, std::labs(x));
  std::vector<IVec> pts;
  for (long k = 0; k <= g; ++k) {
    IVec p(a);
    for (size_t i = 0; i < p.size(); ++i) p[i] += k * d[i] / g;
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

std::vector<FaceDescriptor> faces(const LatticePolytope& P, int d) {
  const int n = P.rank();
  if (d < 0 || d >= n) throw std::invalid_argument("face dimension out of range");
  std::vector<FaceDescriptor> out;
  const auto& V = P.vertices();
  auto sum_active = [&](const std::vector<IVec>& vs, FaceDescriptor& fd) {
    fd.normal.assign(n, 0);
    fd.offset = 0;
    for (const auto& f : P.facets())
      if (std::all_of(vs.begin(), vs.end(), [&](const IVec& v) { return dot(f.normal, v) == f.offset; })) {
        fd.normal = fd.normal + f.normal;
        fd.offset += f.offset;
      }
  };
  if (d == 0) {
    for (const auto& v : V) {
      FaceDescriptor fd;
      fd.dim = 0;
      fd.vertices = {v};
      fd.points = {v};
      sum_active(fd.vertices, fd);
      out.push_back(fd);
    }
    return out;
  }
  if (n == 2) {
    for (size_t i = 0; i < V.size(); ++i) {
      FaceDescriptor fd;
      fd.dim = 1;
      fd.vertices = {V[i], V[(i + 1) % V.size()]};
      fd.points = segment_points(fd.vertices[0], fd.vertices[1]);
      sum_active(fd.vertices, fd);
      out.push_back(fd);
    }
    return out;
  }
  if (d == 2) {
    auto pts = lattice_points(P);
    for (const auto& f : P.facets()) {
      FaceDescriptor fd;
      fd.dim = 2;
      fd.normal = f.normal;
      fd.offset = f.offset;
      for (const auto& v : V)
        if (dot(f.normal, v) == f.offset) fd.vertices.push_back(v);
      for (const auto& p : pts)
        if (dot(f.normal, p) == f.offset) fd.points.push_back(p);
      out.push_back(fd);
    }
    return out;
  }
  // rank 3 edges: vertex pairs whose common facets meet in a line
  const auto& F = P.facets();
  for (size_t i = 0; i < V.size(); ++i)
    for (size_t j = i + 1; j < V.size(); ++j) {
      std::vector<IVec> common;
      for (const auto& f : F)
        if (dot(f.normal, V[i]) == f.offset && dot(f.normal, V[j]) == f.offset) common.push_back(f.normal);
      if (common.size() < 2 || lgt::rank(to_qmat(common)) != 2) continue;
      FaceDescriptor fd;
      fd.dim = 1;
      fd.vertices = {V[i], V[j]};
      fd.points = segment_points(V[i], V[j]);
      sum_active(fd.vertices, fd);
      out.push_back(fd);
    }
  return out;
}

IVec apply(const IMat& M, const IVec& v) {
  IVec r(M.size(), 0);
  for (size_t i = 0; i < M.size(); ++i) r[i] = dot(M[i], v);
  return r;
}

LatticePolytope apply(const IMat& M, const LatticePolytope& P) {
  std::vector<IVec> vs;
  for (const auto& v : P.vertices()) vs.push_back(apply(M, v));
  return LatticePolytope(vs, P.name());
}

long det(const IMat& M) { return idet(M); }

namespace {

// Unimodular maps sending the chosen vertex basis of P to vertex tuples of Q
// and the whole vertex set of P onto that of Q.
std::vector<IMat> vertex_maps(const LatticePolytope& P, const LatticePolytope& Q, bool first_only) {
  std::vector<IMat> out;
  const int n = P.rank();
  if (Q.rank() != n || P.vertices().size() != Q.vertices().size()) return out;
  const auto& VP = P.vertices();
  const auto& VQ = Q.vertices();
  std::vector<size_t> basis;
  for (size_t i = 0; i < VP.size() && int(basis.size()) < n; ++i) {
    std::vector<IVec> rows;
    for (auto b : basis) rows.push_back(VP[b]);
    rows.push_back(VP[i]);
    if (lgt::rank(to_qmat(rows)) == rows.size()) basis.push_back(i);
  }
  QMat B(n, QVec(n));  // columns are basis vertices
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) B[r][c] = VP[basis[c]][r];
  auto Binv = inverse(B);
  std::set<IVec> target(VQ.begin(), VQ.end());
  std::vector<size_t> pick(n, 0);
  std::set<IMat> found;
  while (true) {
    std::set<size_t> uniq(pick.begin(), pick.end());
    if (int(uniq.size()) == n) {
      IMat M(n, IVec(n));
      bool integral = true;
      for (int r = 0; r < n && integral; ++r)
        for (int c = 0; c < n; ++c) {
          Rational s = 0;
          for (int k = 0; k < n; ++k) s += Rational(VQ[pick[k]][r]) * (*Binv)[k][c];
          if (!is_integer(s)) {
            integral = false;
            break;
          }
          M[r][c] = s.get_num().get_si();
        }
      if (integral && std::labs(idet(M)) == 1) {
        bool ok = true;
        for (const auto& v : VP)
          if (!target.count(lgt::apply(M, v))) {
            ok = false;
            break;
          }
        if (ok && found.insert(M).second) {
          out.push_back(M);
          if (first_only) return out;
        }
      }
    }
    int i = n - 1;
    while (i >= 0 && pick[i] + 1 == VQ.size()) pick[i] = 0, --i;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

}  // namespace

SymmetryGroup symmetry_group(const LatticePolytope& P) {
  SymmetryGroup G;
  G.elements = vertex_maps(P, P, false);
  const int n = P.rank();
  IMat sum(n, IVec(n, 0));
  for (const auto& M : G.elements)
    for (int i = 0; i < n; ++i) sum[i] = sum[i] + M[i];
  G.is_symmetric = std::all_of(sum.begin(), sum.end(),
                               [](const IVec& r) { return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; }); });
  return G;
}

std::optional<IMat> lattice_equivalence(const LatticePolytope& P, const LatticePolytope& Q) {
  auto maps = vertex_maps(P, Q, true);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q) {
  std::vector<IVec> pts;
  for (const auto& a : P.vertices())
    for (const auto& b : Q.vertices()) pts.push_back(a + b);
  return LatticePolytope(pts);
}

std::string to_json(const LatticePolytope& P) {
  std::string s = "{\"name\":\"" + P.name() + "\",\"rank\":" + std::to_string(P.rank()) + ",\"vertices\":[";
  for (size_t i = 0; i < P.vertices().size(); ++i) {
    s += i ? "," : "";
    s += "[";
    for (int k = 0; k < P.rank(); ++k) s += (k ? "," : "") + std::to_string(P.vertices()[i][k]);
    s += "]";
  }
  return s + "]}";
}

}  // namespace lgt
