#ifndef LGT_CATALOG_HPP
#define LGT_CATALOG_HPP

#include <string>
#include <vector>

#include "lgt/polytope.hpp"

namespace lgt {

// The 16 reflexive polygons by name, and the threefold entries as Newton
// polytopes of their catalog potentials. Throws on an unknown name.
LatticePolytope catalog(const std::string& name);
std::vector<std::string> catalog_names();
std::vector<std::string> polygon_names();
// name, rank, vertex list; one line per entry.
std::string catalog_table();

}  // namespace lgt

#endif
