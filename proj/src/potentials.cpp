#include "lgt/potentials.hpp"

#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lgt/catalog.hpp"

namespace lgt {

LaurentPoly vertex_extension(const LaurentPoly& f, const IVec& v, const ParamScalar& c) {
  if (v.size() != f.nvars()) throw std::invalid_argument("vertex_extension: rank mismatch");
  if (!f.coeff(v).is_zero()) throw std::invalid_argument("vertex_extension: " + to_string(v) + " already in the support");
  if (!c.is_unit()) throw std::invalid_argument("vertex_extension: coefficient must be a single term");
  LaurentPoly g = f;
  g.add_term(v, c);
  return g;
}

ParamScalar corrected_coefficient(const std::vector<ParamScalar>& m, size_t i) {
  // s^i coefficient of m0 * prod_j (1 + (m_j / m_{j-1}) s)
  UniPoly prod({m[0]});
  for (size_t j = 1; j < m.size(); ++j) prod = prod * UniPoly::linear(m[j] / m[j - 1], 1);
  return i < prod.coeffs().size() ? prod[i] : ParamScalar();
}

LaurentPoly boundary_correction(const LaurentPoly& f_aux, const std::vector<std::vector<IVec>>& edges) {
  LaurentPoly g = f_aux;
  for (const auto& edge : edges) {
    if (edge.size() < 2) throw std::invalid_argument("boundary_correction: edge needs two endpoints");
    std::vector<ParamScalar> m;
    for (const auto& w : edge) {
      ParamScalar c = f_aux.coeff(w);
      if (!c.is_unit())
        throw std::invalid_argument("boundary_correction: coefficient at " + to_string(w) + " is not a single term");
      m.push_back(c);
    }
    for (size_t i = 1; i + 1 < edge.size(); ++i) {
      g.add_term(edge[i], -g.coeff(edge[i]));
      g.add_term(edge[i], corrected_coefficient(m, i));
    }
  }
  return g;
}

bool newton_check(const PotentialEntry& entry) {
  if (entry.potential.is_zero()) return false;
  LatticePolytope N;
  try {
    N = entry.potential.newton_polytope();
  } catch (const std::exception&) {
    return false;  // not full-dimensional
  }
  return lattice_equivalent(N, catalog(entry.delta_name));
}

// ---------------------------------------------------------------- loading

namespace {

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

IVec parse_ivec(const std::string& t) {
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw std::invalid_argument("bad lattice vector: " + t);
  IVec v;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stol(trim(item)));
  return v;
}

std::vector<IVec> parse_ivecs(const std::string& line) {
  std::vector<IVec> r;
  std::stringstream ss(line);
  std::string tok;
  while (ss >> tok) r.push_back(parse_ivec(tok));
  return r;
}

struct RawRecord {
  std::string id;
  std::vector<std::pair<std::string, std::string>> fields;
};

std::vector<RawRecord> split_records(std::istream& in) {
  std::vector<RawRecord> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": bad header");
      out.push_back({line.substr(1, line.size() - 2), {}});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos || out.empty())
      throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": expected key = value");
    out.back().fields.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

}  // namespace

std::vector<PotentialEntry> load_catalog(std::istream& in) {
  std::vector<PotentialEntry> entries;
  std::map<std::string, size_t> index;
  for (const auto& rec : split_records(in)) {
    PotentialEntry e;
    e.fano_id = rec.id;
    e.delta_name = rec.id;
    long nparams = 0;
    size_t nvars = 0;
    for (const auto& [k, v] : rec.fields) {
      if (k == "delta") e.delta_name = v;
      else if (k == "description") e.description = v;
      else if (k == "ks") e.ks_id = v;
      else if (k == "alias") e.aliases.push_back(v);
      else if (k == "params") nparams = std::stol(v);
      else if (k == "labels") e.labels = parse_ivecs(v);
      else if (k == "base") {
        TraceStep s;
        s.kind = TraceStep::Kind::Base;
        s.base = v;
        if (!v.empty() && v[0] == '@') {
          auto it = index.find(v.substr(1));
          if (it == index.end()) throw std::invalid_argument(rec.id + ": base refers to unknown id " + v);
          e.potential = entries[it->second].potential;
        } else {
          nvars = v.find('z') != std::string::npos ? 3 : 2;
          e.potential = parse_laurent(v, nvars);
        }
        e.trace.push_back(s);
      } else if (k == "extend") {
        auto colon = v.find(':');
        if (colon == std::string::npos) throw std::invalid_argument(rec.id + ": extend needs 'point : coefficient'");
        TraceStep s;
        s.kind = TraceStep::Kind::Extension;
        s.point = parse_ivec(trim(v.substr(0, colon)));
        s.coefficient = parse_scalar(trim(v.substr(colon + 1)));
        e.potential = vertex_extension(e.potential, s.point, s.coefficient);
        e.trace.push_back(s);
      } else if (k == "correct") {
        TraceStep s;
        s.kind = TraceStep::Kind::Correction;
        s.edge = parse_ivecs(v);
        e.trace.push_back(s);
      } else {
        throw std::invalid_argument(rec.id + ": unknown field " + k);
      }
    }
    // Corrections are read off the auxiliary potential, independently per edge.
    std::vector<std::vector<IVec>> edges;
    for (const auto& s : e.trace)
      if (s.kind == TraceStep::Kind::Correction) edges.push_back(s.edge);
    if (!edges.empty()) e.potential = boundary_correction(e.potential, edges);
    if (e.potential.is_zero()) throw std::invalid_argument(rec.id + ": no base potential");
    for (long i = 0; i < nparams; ++i) e.parameter_names.push_back("a" + std::to_string(i));
    e.delta = e.potential.newton_polytope();
    e.delta.set_name(e.delta_name);
    index[e.fano_id] = entries.size();
    entries.push_back(std::move(e));
  }
  return entries;
}

namespace {

const std::vector<PotentialEntry>& builtin_entries() {
  static const std::vector<PotentialEntry> entries = [] {
    std::istringstream in(builtin_catalog_text());
    return load_catalog(in);
  }();
  return entries;
}

}  // namespace

std::vector<std::string> potential_ids() {
  std::vector<std::string> ids;
  for (const auto& e : builtin_entries()) ids.push_back(e.fano_id);
  return ids;
}

PotentialEntry builtin_potential(const std::string& id, bool parameters) {
  for (const auto& e : builtin_entries()) {
    bool match = e.fano_id == id;
    for (const auto& a : e.aliases) match = match || a == id;
    if (!match) continue;
    PotentialEntry r = e;
    if (!parameters) {
      QMat zero(r.parameter_names.size());
      r.potential = substitute_params(r.potential, zero);
      r.parameter_names.clear();
    }
    return r;
  }
  throw std::invalid_argument("unknown potential id: " + id);
}

std::string catalog_record(const PotentialEntry& e) {
  std::ostringstream os;
  os << "[" << e.fano_id << "]\n";
  for (const auto& a : e.aliases) os << "alias = " << a << "\n";
  if (e.delta_name != e.fano_id) os << "delta = " << e.delta_name << "\n";
  if (!e.description.empty()) os << "description = " << e.description << "\n";
  if (!e.ks_id.empty()) os << "ks = " << e.ks_id << "\n";
  if (!e.parameter_names.empty()) os << "params = " << e.parameter_names.size() << "\n";
  if (!e.labels.empty()) {
    os << "labels =";
    for (const auto& l : e.labels) os << " " << to_string(l);
    os << "\n";
  }
  for (const auto& s : e.trace) {
    switch (s.kind) {
      case TraceStep::Kind::Base: os << "base = " << s.base << "\n"; break;
      case TraceStep::Kind::Extension:
        os << "extend = " << to_string(s.point) << " : " << to_string(s.coefficient) << "\n";
        break;
      case TraceStep::Kind::Correction:
        os << "correct =";
        for (const auto& w : s.edge) os << " " << to_string(w);
        os << "\n";
        break;
    }
  }
  return os.str();
}

}  // namespace lgt
