#ifndef LGT_POTENTIALS_HPP
#define LGT_POTENTIALS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "lgt/param.hpp"
#include "lgt/polytope.hpp"

namespace lgt {

struct TraceStep {
  enum class Kind { Base, Extension, Correction };
  Kind kind = Kind::Base;
  std::string base;            // Base: expression or "@id"
  IVec point;                  // Extension
  ParamScalar coefficient;     // Extension
  std::vector<IVec> edge;      // Correction: w0..wk in boundary order
};

struct PotentialEntry {
  std::string fano_id;
  std::string delta_name;      // catalog polytope this entry realizes
  LatticePolytope delta;       // Newton polytope in the entry's own coordinates
  std::vector<std::string> parameter_names;
  LaurentPoly potential;
  // Coordinate labels x1, x2, ... of the anticanonical embedding of the dual,
  // with their lattice points; x0 is always the origin.
  std::vector<IVec> labels;
  std::vector<TraceStep> trace;
  std::vector<std::string> aliases;
  std::string ks_id;
  std::string description;
};

LaurentPoly vertex_extension(const LaurentPoly& f, const IVec& v, const ParamScalar& c);
LaurentPoly boundary_correction(const LaurentPoly& f_aux, const std::vector<std::vector<IVec>>& edges);
// Coefficient placed at w_i by the correction along one edge (0 < i < k).
ParamScalar corrected_coefficient(const std::vector<ParamScalar>& m, size_t i);

bool newton_check(const PotentialEntry& entry);

std::vector<std::string> potential_ids();
// Resolves ids and aliases ("S4", "P8b"). Throws on an unknown id.
PotentialEntry builtin_potential(const std::string& id, bool parameters = true);

// Plain-text catalog, one bracketed record per id.
std::vector<PotentialEntry> load_catalog(std::istream& in);
std::string catalog_record(const PotentialEntry& e);
const std::string& builtin_catalog_text();

}  // namespace lgt

#endif
