#include "lgt/catalog.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "lgt/potentials.hpp"

namespace lgt {

namespace {

const std::vector<std::pair<std::string, std::vector<IVec>>>& polygon_table() {
  static const std::vector<std::pair<std::string, std::vector<IVec>>> table = {
      {"P3", {{1, 0}, {0, 1}, {-1, -1}}},
      {"P4a", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}},
      {"P4b", {{1, 0}, {0, -1}, {-1, 1}, {0, 1}}},
      {"P4c", {{0, 1}, {1, -1}, {-1, -1}}},
      {"P5a", {{1, 0}, {1, 1}, {0, 1}, {-1, -1}, {0, -1}}},
      {"P5b", {{0, 1}, {1, 0}, {1, -1}, {-1, -1}}},
      {"P6a", {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}},
      {"P6b", {{0, 1}, {1, 1}, {1, -1}, {-1, -1}}},
      {"P6c", {{-1, -1}, {1, -1}, {1, 0}, {0, 1}, {-1, 0}}},
      {"P6d", {{1, 0}, {0, 1}, {-2, -3}}},
      {"P7a", {{0, 1}, {1, 1}, {1, -1}, {-1, -1}, {-1, 0}}},
      {"P7b", {{-1, -1}, {-1, 0}, {0, 1}, {2, -1}}},
      {"P8a", {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}},
      {"P8b", {{0, 1}, {1, 1}, {1, -1}, {-2, -1}}},
      {"P8c", {{-2, -1}, {0, 1}, {2, -1}}},
      {"P9", {{1, 2}, {1, -1}, {-2, -1}}},
  };
  return table;
}

const std::vector<std::string> kThreefolds = {"V4", "V6", "V8-cube", "V8-alt", "D22", "C222", "V12", "V10", "D1111"};

}  // namespace

std::vector<std::string> polygon_names() {
  std::vector<std::string> r;
  for (const auto& [n, v] : polygon_table()) r.push_back(n);
  return r;
}

std::vector<std::string> catalog_names() {
  auto r = polygon_names();
  r.insert(r.end(), kThreefolds.begin(), kThreefolds.end());
  return r;
}

LatticePolytope catalog(const std::string& name) {
  for (const auto& [n, v] : polygon_table())
    if (n == name) return LatticePolytope(v, n);
  for (const auto& n : kThreefolds)
    if (n == name) {
      LatticePolytope P = builtin_potential(n, false).potential.newton_polytope();
      P.set_name(n);
      return P;
    }
  throw std::invalid_argument("unknown catalog polytope: " + name);
}

std::string catalog_table() {
  std::ostringstream os;
  for (const auto& n : catalog_names()) {
    LatticePolytope P = catalog(n);
    os << n << "\t" << P.rank() << "\t";
    for (size_t i = 0; i < P.vertices().size(); ++i) os << (i ? " " : "") << to_string(P.vertices()[i]);
    os << "\n";
  }
  return os.str();
}

}  // namespace lgt
