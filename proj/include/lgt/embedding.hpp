#ifndef LGT_EMBEDDING_HPP
#define LGT_EMBEDDING_HPP

#include <string>
#include <vector>

#include "lgt/param.hpp"
#include "lgt/polytope.hpp"
#include "lgt/potentials.hpp"

namespace lgt {

// Multisets of coordinate indices, sorted.
struct Binomial {
  std::vector<size_t> lhs, rhs;
  size_t degree() const { return lhs.size(); }
  bool operator==(const Binomial& o) const = default;
};

std::string to_string(const Binomial& b);  // "x1*x3 = x0*x2"
// Parses "x1*x3 = x0*x2" or "x1x3 = x0x2", exponents as x0^2.
Binomial parse_binomial(const std::string& text);

struct AnticanonicalEmbedding {
  LatticePolytope delta;
  std::vector<IVec> coordinates;  // coordinates[0] is the origin
  std::vector<Binomial> relations;

  size_t index_of(const IVec& c) const;  // throws if c is not a coordinate
  bool has_relation(const Binomial& b) const;  // up to swapping sides
};

// Coordinates follow `labels` when given (they must be exactly the nonzero
// lattice points), otherwise boundary order (rank 2) or lexicographic order.
// All degree-2 binomials are listed; in degree 3 only those not obtainable by
// quadric moves.
AnticanonicalEmbedding anticanonical_embedding(const LatticePolytope& delta, const std::vector<IVec>& labels = {});

struct BoundaryComponent {
  FaceDescriptor face;
  // Rank 2: the edge points in boundary order w0..wk, with x_{w_j} = s^j on the
  // affine chart t = 1. Rank 3: the facet's lattice points.
  std::vector<size_t> coordinates;
  std::vector<Binomial> relations;
  int degree() const { return int(coordinates.size()) - 1; }
};

std::vector<BoundaryComponent> boundary_components(const AnticanonicalEmbedding& emb);

// x_{w_j} = s^{k-j} t^j in the component's coordinate order.
std::vector<std::pair<long, long>> parametrization_exponents(const BoundaryComponent& C);

struct Pencil {
  AnticanonicalEmbedding embedding;
  std::vector<ParamScalar> member;  // per coordinate; the x0 entry is dropped into the boundary member
  ParamScalar constant;             // constant term of the potential
  LaurentPoly potential;
  std::vector<std::string> parameter_names;
};

Pencil pencil_from_potential(const PotentialEntry& entry);
std::string to_string(const Pencil& p);  // "|x1 + x2 + e^{-a0}*x3, x0|"

// Substitution of a torus chart x_i = prod_j z_j^{A[i][j]} (rows of length n+1)
// followed by clearing denominators: returns the numerator and the cleared monomial.
struct ChartPencil {
  LaurentPoly member;    // polynomial in z
  IVec boundary;         // exponent of the boundary monomial
};
ChartPencil chart_pencil(const LaurentPoly& f, const IMat& chart);
IMat standard_chart(size_t n);  // x_i = z_i / z_0

}  // namespace lgt

#endif
