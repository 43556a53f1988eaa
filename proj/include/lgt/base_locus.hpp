#ifndef LGT_BASE_LOCUS_HPP
#define LGT_BASE_LOCUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lgt/embedding.hpp"
#include "lgt/param.hpp"

namespace lgt {

UniPoly restrict_pencil(const Pencil& p, const BoundaryComponent& C);

// alpha*s + beta; alpha = 0 encodes a root at infinity.
struct LinearFactor {
  ParamScalar alpha, beta;
  int multiplicity = 1;
  bool at_infinity() const { return alpha.is_zero(); }
  ParamScalar root() const;  // -beta/alpha; throws at infinity
};

struct UniFactorization {
  std::vector<LinearFactor> factors;
  UniPoly remainder;  // a unit when the factorization is complete
  bool complete() const { return remainder.degree() == 0; }
};

// Greedy trial division by monomial-type candidate roots. `projective_degree`
// (the edge length) accounts for roots at infinity; pass -1 to skip them.
UniFactorization factor_unipoly(const UniPoly& g, int projective_degree = -1);
// prod (alpha s + beta)^m * remainder, ignoring infinite roots.
UniPoly reconstruct(const UniFactorization& fz);

struct BasePoint {
  size_t component = 0;
  bool at_infinity = false;
  ParamScalar root;  // value of s on the component chart x_{w_j} = s^j
  int multiplicity = 1;
  std::vector<ParamScalar> coordinates;  // ambient, indexed like the embedding
};

struct BaseCurve {
  FaceDescriptor facet;
  LaurentPoly factor;
  int multiplicity = 1;
};

struct FacetFactorization {
  FaceDescriptor facet;
  LaurentPoly restriction;
  LaurentPoly unit;  // single term
  std::vector<std::pair<LaurentPoly, int>> factors;
  LaurentPoly remainder;  // 1 when fully factored
};

struct BaseCycle {
  int rank = 2;
  std::vector<BoundaryComponent> components;
  std::vector<UniFactorization> restrictions;  // rank 2, per component
  std::vector<BasePoint> points;
  std::vector<FacetFactorization> facets;      // rank 3
  std::vector<BaseCurve> curves;
  std::vector<std::string> reports;
  long total_multiplicity() const;
};

BaseCycle base_cycle(const Pencil& p);

// Exact division in the Laurent ring; nullopt when g does not divide f.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g);
// Best-effort: trial division by binomials and trinomials with unit coefficients.
FacetFactorization factor_heuristic(const LaurentPoly& f);
bool verify_facet_factorization(const LaurentPoly& f, const FaceDescriptor& facet,
                                const std::vector<LaurentPoly>& claimed, const LaurentPoly& unit);

struct CoincidenceCondition {
  size_t i = 0, j = 0;   // indices into BaseCycle::points
  QVec coefficients;     // <coefficients, a> = 0
  bool identical = false;  // the two roots agree for every a
};

struct CoincidenceArrangement {
  std::vector<CoincidenceCondition> conditions;
  std::vector<std::string> warnings;
  // Sup-norm distance of a to the union of the hyperplanes.
  double distance(const std::vector<double>& a) const;
  bool in_open_complement(const std::vector<double>& a, double delta) const { return distance(a) > delta; }
};

CoincidenceArrangement coincidence_arrangement(const BaseCycle& cycle);
std::string to_string(const CoincidenceCondition& c);  // "a2 - a4 = 0"

// Projective chart data for threefold pencils: the member restricted to each
// coordinate hyperplane z_i = 0, recognised as c * L^d when it is a power of a linear form.
struct PlaneComponent {
  size_t hyperplane = 0;
  LaurentPoly restriction;
  std::optional<QVec> linear_form;
  int power = 0;
};
std::vector<PlaneComponent> plane_components(const ChartPencil& cp);
// Pairwise intersections of reduced plane components {z_i = 0 = L_i}, as points of P^n.
struct Node {
  size_t a = 0, b = 0;
  QVec point;  // first nonzero coordinate is 1
};
std::vector<Node> component_nodes(const std::vector<PlaneComponent>& comps, size_t nz);

}  // namespace lgt

#endif
