// lgt: command-line front end for the LG model toolkit.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lgt/adiabatic.hpp"
#include "lgt/base_locus.hpp"
#include "lgt/catalog.hpp"
#include "lgt/embedding.hpp"
#include "lgt/git.hpp"
#include "lgt/periods.hpp"
#include "lgt/potentials.hpp"
#include "lgt/verify.hpp"

using namespace lgt;
using json = nlohmann::ordered_json;

namespace {

bool g_json = false;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

json vec_json(const IVec& v) { return json(v); }

std::vector<std::string> qvec_strings(const QVec& v) {
  std::vector<std::string> r;
  for (const auto& x : v) r.push_back(to_string(x));
  return r;
}

// --params as rationals, one per parameter of the entry.
std::optional<QVec> read_params(const std::vector<std::string>& raw, const PotentialEntry& e) {
  if (raw.empty()) return std::nullopt;
  if (raw.size() != e.parameter_names.size())
    throw UsageError(e.fano_id + " has " + std::to_string(e.parameter_names.size()) + " parameters, got " +
                     std::to_string(raw.size()));
  QVec a;
  for (const auto& s : raw) a.push_back(parse_rational(s));
  return a;
}

std::vector<double> as_doubles(const QVec& a) {
  std::vector<double> r;
  for (const auto& x : a) r.push_back(x.get_d());
  return r;
}

bool all_zero(const QVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

std::string point_string(const std::vector<ParamScalar>& c) {
  std::string s = "[";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? " : " : "") + to_string(c[i]);
  return s + "]";
}

std::string numeric_point(const std::vector<ParamScalar>& c, const std::vector<double>& a) {
  std::string s = "[";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? " : " : "") + fmt_double(c[i].evaluate(a));
  return s + "]";
}

// Groups of base points that coincide at the given parameters.
std::vector<std::vector<size_t>> coincident_groups(const BaseCycle& bc, const std::optional<QVec>& a) {
  std::vector<size_t> parent(bc.points.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<size_t(size_t)> root = [&](size_t i) { return parent[i] == i ? i : parent[i] = root(parent[i]); };
  if (a) {
    for (const auto& c : coincidence_arrangement(bc).conditions) {
      Rational s = 0;
      for (size_t k = 0; k < c.coefficients.size(); ++k) s += c.coefficients[k] * (*a)[k];
      if (c.identical || s == 0) parent[root(c.i)] = root(c.j);
    }
  }
  std::map<size_t, std::vector<size_t>> g;
  for (size_t i = 0; i < parent.size(); ++i) g[root(i)].push_back(i);
  std::vector<std::vector<size_t>> out;
  for (auto& [r, v] : g) out.push_back(v);
  return out;
}

int cmd_catalog() {
  if (g_json) {
    json j = json::array();
    for (const auto& n : catalog_names()) {
      auto P = catalog(n);
      json v = json::array();
      for (const auto& p : P.vertices()) v.push_back(vec_json(p));
      j.push_back({{"name", n}, {"rank", P.rank()}, {"vertices", v}, {"reflexive", is_reflexive(P)}});
    }
    json pots = json::array();
    for (const auto& id : potential_ids()) {
      auto e = builtin_potential(id);
      pots.push_back({{"id", id}, {"delta", e.delta_name}, {"description", e.description}, {"aliases", e.aliases}});
    }
    std::cout << json{{"polytopes", j}, {"potentials", pots}}.dump(2) << "\n";
    return 0;
  }
  std::cout << catalog_table() << "\npotentials:\n";
  for (const auto& id : potential_ids()) {
    auto e = builtin_potential(id);
    std::cout << "  " << id << "  (" << e.delta_name << ")  " << e.description << "\n";
  }
  return 0;
}

int cmd_dual(const std::string& name) {
  LatticePolytope P = catalog(name);
  DualResult d = polar_dual(P);
  std::optional<std::string> match;
  if (d.polytope)
    for (const auto& n : catalog_names()) {
      auto Q = catalog(n);
      if (Q.rank() == P.rank() && lattice_equivalent(*d.polytope, Q)) {
        match = n;
        break;
      }
    }
  bool involution = d.polytope && polar_dual(*d.polytope).polytope == P;
  if (g_json) {
    json v = json::array();
    for (const auto& q : d.vertices) v.push_back(qvec_strings(q));
    std::cout << json{{"name", name},
                      {"dual_vertices", v},
                      {"lattice", d.is_lattice},
                      {"reflexive", is_reflexive(P)},
                      {"equivalent_to", match ? json(*match) : json(nullptr)},
                      {"involution", involution}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "dual of " << name << ":";
    for (const auto& q : d.vertices) std::cout << " " << to_string(q);
    std::cout << "\nlattice polytope: " << (d.is_lattice ? "yes" : "no") << "\n";
    std::cout << "reflexive: " << (is_reflexive(P) ? "yes" : "no") << "\n";
    if (match) std::cout << "lattice equivalent to " << *match << "\n";
    std::cout << "dual of dual = " << name << ": " << (involution ? "yes" : "no") << "\n";
  }
  return d.is_lattice && involution ? 0 : 1;
}

int cmd_potential(const std::string& id, bool zero) {
  auto e = builtin_potential(id, !zero);
  bool newton = newton_check(e);
  if (g_json) {
    std::cout << json{{"id", e.fano_id},
                      {"delta", e.delta_name},
                      {"parameters", e.parameter_names},
                      {"potential", to_string(e.potential)},
                      {"newton_check", newton},
                      {"record", catalog_record(e)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << e.fano_id << " (" << e.description << ")\n";
    std::cout << "Newton polytope: " << e.delta_name << "\n";
    std::cout << "f = " << to_string(e.potential) << "\n";
    std::cout << "newton_check: " << (newton ? "pass" : "FAIL") << "\n";
  }
  return newton ? 0 : 1;
}

int cmd_embed(const std::string& name) {
  AnticanonicalEmbedding emb;
  try {
    auto e = builtin_potential(name);
    emb = anticanonical_embedding(e.delta, e.labels);
  } catch (const std::invalid_argument&) {
    emb = anticanonical_embedding(catalog(name));
  }
  auto comps = boundary_components(emb);
  if (g_json) {
    json coords = json::array(), rels = json::array(), cs = json::array();
    for (const auto& c : emb.coordinates) coords.push_back(vec_json(c));
    for (const auto& r : emb.relations) rels.push_back(to_string(r));
    for (const auto& c : comps) cs.push_back({{"normal", vec_json(c.face.normal)}, {"coordinates", c.coordinates}});
    std::cout << json{{"coordinates", coords}, {"relations", rels}, {"components", cs}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "coordinates:\n";
  for (size_t i = 0; i < emb.coordinates.size(); ++i) std::cout << "  x" << i << "  " << to_string(emb.coordinates[i]) << "\n";
  std::cout << "relations:\n";
  for (const auto& r : emb.relations) std::cout << "  " << to_string(r) << "\n";
  std::cout << "boundary components:\n";
  for (const auto& c : comps) {
    std::cout << "  normal " << to_string(c.face.normal) << ": P[";
    for (size_t k = 0; k < c.coordinates.size(); ++k) std::cout << (k ? ":" : "") << "x" << c.coordinates[k];
    std::cout << "]\n";
  }
  return 0;
}

int cmd_baselocus(const std::string& id, const std::vector<std::string>& raw) {
  auto e = builtin_potential(id);
  auto a = read_params(raw, e);
  if (a && all_zero(*a)) e = builtin_potential(id, false);
  Pencil p = pencil_from_potential(e);
  BaseCycle bc = base_cycle(p);
  long deg = normalized_volume(e.delta);
  bool ok = bc.rank != 2 || bc.total_multiplicity() == deg;
  if (bc.rank == 2) {
    auto groups = coincident_groups(bc, a && !all_zero(*a) ? a : std::nullopt);
    if (g_json) {
      json pts = json::array();
      for (const auto& bp : bc.points) {
        json o{{"component", bp.component}, {"coordinates", json::array()}, {"multiplicity", bp.multiplicity}};
        for (const auto& c : bp.coordinates) o["coordinates"].push_back(to_string(c));
        if (a) o["numeric"] = numeric_point(bp.coordinates, as_doubles(*a));
        pts.push_back(o);
      }
      std::cout << json{{"pencil", to_string(p)},
                        {"points", pts},
                        {"coincident", groups},
                        {"total_multiplicity", bc.total_multiplicity()},
                        {"normalized_volume", deg}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "pencil " << to_string(p) << "\n";
      for (size_t i = 0; i < bc.points.size(); ++i) {
        const auto& bp = bc.points[i];
        std::cout << "  p" << i + 1 << " = " << point_string(bp.coordinates) << "  mult " << bp.multiplicity;
        if (a) std::cout << "  ~ " << numeric_point(bp.coordinates, as_doubles(*a));
        std::cout << "\n";
      }
      for (const auto& g : groups)
        if (g.size() > 1) {
          std::cout << "  coincide at these parameters:";
          for (size_t i : g) std::cout << " p" << i + 1;
          std::cout << "\n";
        }
      std::cout << "total multiplicity " << bc.total_multiplicity() << ", normalized volume " << deg << "\n";
    }
  } else {
    if (g_json) {
      json fs = json::array();
      for (const auto& f : bc.facets) {
        json fac = json::array();
        for (const auto& [g, m] : f.factors) fac.push_back({{"factor", to_string(g)}, {"power", m}});
        fs.push_back({{"normal", vec_json(f.facet.normal)},
                      {"restriction", to_string(f.restriction)},
                      {"unit", to_string(f.unit)},
                      {"factors", fac},
                      {"remainder", to_string(f.remainder)}});
      }
      std::cout << json{{"facets", fs}, {"reports", bc.reports}}.dump(2) << "\n";
    } else {
      for (const auto& f : bc.facets) {
        std::cout << "facet " << to_string(f.facet.normal) << ": " << to_string(f.restriction) << "\n  = "
                  << to_string(f.unit);
        for (const auto& [g, m] : f.factors) std::cout << " * (" << to_string(g) << ")" << (m > 1 ? "^" + std::to_string(m) : "");
        if (!(f.remainder == LaurentPoly::constant(f.remainder.nvars(), 1))) std::cout << " * [" << to_string(f.remainder) << "]";
        std::cout << "\n";
      }
      for (const auto& r : bc.reports) std::cout << r << "\n";
    }
  }
  return ok ? 0 : 1;
}

TorusAction parse_weights(const std::string& text, size_t ncoords) {
  // "0,0;3,0;-3,3;0,-3": one weight vector per ambient coordinate
  std::vector<IVec> w;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    IVec v;
    std::stringstream ps(part);
    std::string x;
    while (std::getline(ps, x, ',')) v.push_back(std::stol(x));
    w.push_back(v);
  }
  if (w.size() != ncoords) throw UsageError("--weights needs " + std::to_string(ncoords) + " vectors");
  for (const auto& v : w)
    if (v.size() != w.front().size()) throw UsageError("--weights vectors must have equal length");
  return TorusAction(w.front().size(), w);
}

int cmd_chow(const std::string& id, const std::vector<std::string>& raw, const std::string& weights) {
  auto e = builtin_potential(id);
  if (e.delta.rank() != 2) throw UsageError("chow works with surface entries; " + id + " is a threefold");
  auto a = read_params(raw, e);
  if (a && all_zero(*a)) e = builtin_potential(id, false);
  Pencil p = pencil_from_potential(e);
  BaseCycle bc = base_cycle(p);
  WeightedCycle W;
  for (const auto& g : coincident_groups(bc, a && !all_zero(*a) ? a : std::nullopt)) {
    CyclePoint c{bc.points[g.front()].coordinates, 0, ""};
    for (size_t i : g) c.multiplicity += bc.points[i].multiplicity;
    W.points.push_back(c);
  }
  TorusAction action = weights.empty() ? weights_from_lattice(p.embedding.coordinates, 2)
                                       : parse_weights(weights, p.embedding.coordinates.size());
  ChamberScan scan = chamber_scan(W, action);
  auto chambers = scan.maximal();
  if (g_json) {
    json cs = json::array();
    for (const auto& c : scan.chambers) {
      cs.push_back({{"dim", c.dim},
                    {"inequalities", inequality_string(scan, c, action)},
                    {"sample", vec_json(c.sample)},
                    {"limits", c.limit},
                    {"chow_form", action.form_string(c.chow_form)},
                    {"sign", c.sign}});
    }
    std::cout << json{{"verdict", to_string(scan.verdict)},
                      {"reason", scan.reason},
                      {"witness", vec_json(scan.witness)},
                      {"chambers", cs}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& c : scan.chambers) {
      std::cout << inequality_string(scan, c, action) << "\n    limits:";
      for (const auto& l : c.limit) {
        std::cout << " {";
        for (size_t k = 0; k < l.size(); ++k) std::cout << (k ? "," : "") << l[k];
        std::cout << "}";
      }
      std::cout << "\n    Ch = " << action.form_string(c.chow_form) << "\n";
    }
    std::cout << "verdict: " << to_string(scan.verdict) << " (" << scan.reason << ")\n";
  }
  return scan.verdict == Verdict::Unstable ? 1 : 0;
}

int cmd_balance(const std::string& id, const std::string& a0s) {
  auto e = builtin_potential(id);
  if (e.fano_id != "P2") throw UsageError("balance is implemented for the P2 mirror global quotient only");
  double a0 = parse_rational(a0s).get_d();
  double lam = balance_solve(p2_quotient_points(a0));
  double want = std::exp(a0 / 9);
  auto mu = moment_balance(p2_quotient_points(a0), lam, lam * lam);
  bool ok = std::fabs(lam - want) <= 1e-9 && std::fabs(mu[0]) <= 1e-9 && std::fabs(mu[1]) <= 1e-9;
  if (g_json) {
    std::cout << json{{"a0", a0s}, {"lambda", lam}, {"expected", want}, {"moment", {mu[0], mu[1]}}, {"pass", ok}}.dump(2)
              << "\n";
  } else {
    std::cout << "|lambda| = " << fmt_double(lam) << "  (e^{a0/9} = " << fmt_double(want) << ")\n";
    std::cout << "sum mu = (" << fmt_double(mu[0]) << ", " << fmt_double(mu[1]) << ")\n";
  }
  return ok ? 0 : 1;
}

int cmd_period(const std::string& id, size_t N, const std::vector<std::string>& raw) {
  auto e = builtin_potential(id);
  auto a = read_params(raw, e);
  if (a && all_zero(*a)) e = builtin_potential(id, false);
  PowerSeries ps = classical_period(e.potential, N);
  json j = json::array();
  for (size_t k = 0; k <= N; ++k) {
    json o{{"k", k}, {"c", to_string(ps[k])}};
    if (a && !all_zero(*a)) o["numeric"] = ps[k].evaluate(as_doubles(*a));
    j.push_back(o);
  }
  if (g_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& o : j) {
      std::cout << "c_" << o["k"].get<size_t>() << " = " << o["c"].get<std::string>();
      if (o.contains("numeric")) std::cout << "  ~ " << fmt_double(o["numeric"].get<double>());
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_adiabatic(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  FibrationSummary f = parse_fibration(ss.str());
  AdiabaticReport r = verdict(f);
  if (g_json) {
    std::cout << json{{"verdict", to_string(r.verdict)},
                      {"rule", r.rule},
                      {"max_a", to_string(r.max_a)},
                      {"threshold", to_string(r.threshold)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "verdict: " << to_string(r.verdict) << "\nrule: " << r.rule << "\nmax a_P = " << to_string(r.max_a)
              << ", threshold " << to_string(r.threshold) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& filter) {
  SuiteReport r = verify_paper_suite(filter.empty() ? std::nullopt : std::optional<std::string>(filter));
  std::cout << (g_json ? render_json(r) : render_text(r));
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric LG models: potentials, base loci, Chow stability, periods"};
  app.add_flag("--json", g_json, "machine-readable output");
  app.require_subcommand(1);

  std::string name, weights, a0, filter, path;
  std::vector<std::string> params;
  size_t N = 8;
  bool zero = false;

  auto* catalog_cmd = app.add_subcommand("catalog", "list polytopes and potentials");
  auto* dual_cmd = app.add_subcommand("dual", "polar dual of a catalog polytope");
  dual_cmd->add_option("name", name)->required();
  auto* pot_cmd = app.add_subcommand("potential", "catalog potential");
  pot_cmd->add_option("id", name)->required();
  pot_cmd->add_flag("--at-zero", zero, "set all parameters to 0");
  auto* embed_cmd = app.add_subcommand("embed", "anticanonical embedding");
  embed_cmd->add_option("name", name)->required();
  auto* bl_cmd = app.add_subcommand("baselocus", "base locus of the anticanonical pencil");
  bl_cmd->add_option("id", name)->required();
  bl_cmd->add_option("--params", params, "parameter values p/q")->delimiter(',');
  auto* chow_cmd = app.add_subcommand("chow", "Hilbert-Mumford chamber scan of the base cycle");
  chow_cmd->add_option("id", name)->required();
  chow_cmd->add_option("--params", params, "parameter values p/q")->delimiter(',');
  chow_cmd->add_option("--weights", weights, "torus weights per coordinate, e.g. 0,0;1,0;...");
  auto* bal_cmd = app.add_subcommand("balance", "balancing in the global quotient");
  bal_cmd->add_option("id", name)->required();
  bal_cmd->add_option("--a0", a0)->required();
  auto* per_cmd = app.add_subcommand("period", "classical period sequence");
  per_cmd->add_option("id", name)->required();
  per_cmd->add_option("-N", N, "order")->required();
  per_cmd->add_option("--params", params, "parameter values p/q")->delimiter(',');
  auto* adi_cmd = app.add_subcommand("adiabatic", "adiabatic K-stability of a fibration");
  adi_cmd->add_option("fibration", path)->required();
  auto* ver_cmd = app.add_subcommand("verify-paper", "regression fixtures of the printed data");
  ver_cmd->add_option("case", filter);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*catalog_cmd) return cmd_catalog();
    if (*dual_cmd) return cmd_dual(name);
    if (*pot_cmd) return cmd_potential(name, zero);
    if (*embed_cmd) return cmd_embed(name);
    if (*bl_cmd) return cmd_baselocus(name, params);
    if (*chow_cmd) return cmd_chow(name, params, weights);
    if (*bal_cmd) return cmd_balance(name, a0);
    if (*per_cmd) return cmd_period(name, N, params);
    if (*adi_cmd) return cmd_adiabatic(path);
    if (*ver_cmd) return cmd_verify(filter);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
