#ifndef LGT_POLYTOPE_HPP
#define LGT_POLYTOPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lgt/rational.hpp"

namespace lgt {

using IVec = std::vector<long>;
using IMat = std::vector<IVec>;  // row-major, square

IVec operator+(const IVec& a, const IVec& b);
IVec operator-(const IVec& a, const IVec& b);
IVec operator-(const IVec& a);
long dot(const IVec& a, const IVec& b);
std::string to_string(const IVec& v);

// Supporting inequality <normal, x> <= offset with a primitive normal.
struct Halfspace {
  IVec normal;
  long offset = 0;
};

struct FaceDescriptor {
  int dim = 0;
  IVec normal;   // supporting functional: <normal, x> = offset on the face
  long offset = 0;
  std::vector<IVec> vertices;
  // Lattice points of the face. Edges: ordered along the edge (consecutive
  // differences are equal). Polygon edges follow the clockwise boundary.
  std::vector<IVec> points;
};

class LatticePolytope {
 public:
  LatticePolytope() = default;
  // Convex hull of the given points. Throws unless full-dimensional of rank 2 or 3.
  explicit LatticePolytope(std::vector<IVec> points, std::string name = "");

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  // Rank 2: clockwise order. Rank 3: lexicographic.
  const std::vector<IVec>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }

  bool contains(const IVec& p) const;
  bool interior(const IVec& p) const;
  bool operator==(const LatticePolytope& o) const;

 private:
  int rank_ = 0;
  std::string name_;
  std::vector<IVec> vertices_;
  std::vector<Halfspace> facets_;
};

std::vector<IVec> lattice_points(const LatticePolytope& P);
std::vector<IVec> boundary_points(const LatticePolytope& P);

struct DualResult {
  std::vector<QVec> vertices;
  bool is_lattice = false;
  std::optional<LatticePolytope> polytope;  // set when is_lattice
};

// {u : <u,v> >= -1 for all v in P}. Throws unless the origin is interior.
DualResult polar_dual(const LatticePolytope& P);
bool is_reflexive(const LatticePolytope& P);

QVec barycenter(const LatticePolytope& P);
long normalized_volume(const LatticePolytope& P);

std::vector<FaceDescriptor> faces(const LatticePolytope& P, int d);

struct SymmetryGroup {
  std::vector<IMat> elements;
  bool is_symmetric = false;
};

SymmetryGroup symmetry_group(const LatticePolytope& P);

// Some unimodular M with M(P) = Q, if any.
std::optional<IMat> lattice_equivalence(const LatticePolytope& P, const LatticePolytope& Q);
inline bool lattice_equivalent(const LatticePolytope& P, const LatticePolytope& Q) {
  return lattice_equivalence(P, Q).has_value();
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);
LatticePolytope apply(const IMat& M, const LatticePolytope& P);
IVec apply(const IMat& M, const IVec& v);
long det(const IMat& M);

std::string to_json(const LatticePolytope& P);

}  // namespace lgt

#endif
