#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "lgt/catalog.hpp"
#include "lgt/polytope.hpp"

using namespace lgt;

namespace {

// Twice the shoelace area.
long shoelace2(const LatticePolytope& P) {
  // vertices of a convex polygon sorted by angle around the barycenter
  auto v = P.vertices();
  double cx = 0, cy = 0;
  for (const auto& p : v) cx += double(p[0]), cy += double(p[1]);
  cx /= double(v.size()), cy /= double(v.size());
  std::sort(v.begin(), v.end(), [&](const IVec& a, const IVec& b) {
    return std::atan2(double(a[1]) - cy, double(a[0]) - cx) < std::atan2(double(b[1]) - cy, double(b[0]) - cx);
  });
  long s = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return std::labs(s);
}

// Lattice points u in a box with <u, v> >= -1 for every vertex v.
std::set<IVec> dual_points_brute(const LatticePolytope& P) {
  std::set<IVec> out;
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y) {
      bool ok = true;
      for (const auto& v : P.vertices()) ok = ok && x * v[0] + y * v[1] >= -1;
      if (ok) out.insert({x, y});
    }
  return out;
}

}  // namespace

TEST_CASE("lattice points of P3 and P6a") {
  auto pts = lattice_points(catalog("P3"));
  CHECK(std::set<IVec>(pts.begin(), pts.end()) == std::set<IVec>{{0, 0}, {1, 0}, {0, 1}, {-1, -1}});
  CHECK(lattice_points(catalog("P6a")).size() == 7);
  CHECK_THROWS(LatticePolytope({{0, 0}}));
}

TEST_CASE("polar duals against a box enumeration") {
  for (const auto& n : polygon_names()) {
    CAPTURE(n);
    auto P = catalog(n);
    auto d = polar_dual(P);
    REQUIRE(d.polytope);
    auto pts = lattice_points(*d.polytope);
    CHECK(std::set<IVec>(pts.begin(), pts.end()) == dual_points_brute(P));
    CHECK(polar_dual(*d.polytope).polytope == P);
    CHECK(is_reflexive(P));
  }
  CHECK(lattice_equivalent(*polar_dual(catalog("P3")).polytope, catalog("P9")));
  CHECK(lattice_equivalent(*polar_dual(catalog("P6a")).polytope, catalog("P6a")));
  CHECK(polygon_names().size() == 16);
}

TEST_CASE("normalized volume is twice the area") {
  for (const auto& n : polygon_names()) {
    CAPTURE(n);
    CHECK(normalized_volume(catalog(n)) == shoelace2(catalog(n)));
  }
  CHECK(normalized_volume(catalog("P4a")) == 4);
  CHECK(normalized_volume(catalog("P3")) == 3);
  CHECK(normalized_volume(catalog("P9")) == 9);
}

TEST_CASE("barycenters") {
  CHECK(barycenter(catalog("P3")) == QVec{0, 0});
  CHECK(barycenter(*polar_dual(catalog("P3")).polytope) == QVec{0, 0});
  LatticePolytope shifted({{3, -1}, {0, 2}, {0, -1}});
  CHECK(barycenter(shifted) == QVec{1, 0});
}

TEST_CASE("faces and symmetries") {
  auto edges = faces(catalog("P6a"), 1);
  CHECK(edges.size() == 6);
  for (const auto& e : edges) CHECK(e.points.size() == 2);
  auto g = symmetry_group(catalog("P3"));
  CHECK(g.elements.size() == 6);
  CHECK(g.is_symmetric);
  LatticePolytope square({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  CHECK(symmetry_group(square).elements.size() == 8);
}

TEST_CASE("threefold catalog entries") {
  // Newton polytope is the cube; its dual has the face fan of (P^1)^3
  CHECK(catalog("V8-cube").vertices().size() == 8);
  auto oct = polar_dual(catalog("V8-cube"));
  REQUIRE(oct.polytope);
  std::set<IVec> units;
  for (size_t i = 0; i < 3; ++i)
    for (long s : {1, -1}) {
      IVec e(3, 0);
      e[i] = s;
      units.insert(e);
    }
  auto vs = oct.polytope->vertices();
  CHECK(std::set<IVec>(vs.begin(), vs.end()) == units);
  CHECK(faces(catalog("D22"), 2).size() == 8);
}
