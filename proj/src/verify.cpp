#include "lgt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lgt/adiabatic.hpp"
#include "lgt/base_locus.hpp"
#include "lgt/catalog.hpp"
#include "lgt/embedding.hpp"
#include "lgt/git.hpp"
#include "lgt/periods.hpp"
#include "lgt/potentials.hpp"

#include "json.hpp"

namespace lgt {

size_t SuiteReport::failures() const {
  return size_t(std::count_if(fixtures.begin(), fixtures.end(), [](const FixtureResult& f) { return !f.pass; }));
}

namespace {

// ---------------------------------------------------------------- helpers

struct Suite {
  std::string tag;
  std::vector<FixtureResult>* out;

  void add(const std::string& id, const std::string& loc, const std::string& expected, const std::string& actual,
           bool pass, const std::string& erratum = "") {
    out->push_back({tag, tag + "." + id, loc, expected, actual, pass, erratum});
  }

  // Runs one fixture body; an exception is a failure, not a crash of the suite.
  void run(const std::string& id, const std::string& loc, const std::function<void()>& body) {
    size_t before = out->size();
    try {
      body();
    } catch (const std::exception& e) {
      out->resize(before);
      add(id, loc, "(fixture ran)", std::string("error: ") + e.what(), false);
    }
  }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string r;
  for (size_t i = 0; i < parts.size(); ++i) r += (i ? sep : "") + parts[i];
  return r;
}

std::string fmt_point(const std::vector<ParamScalar>& v) {
  std::vector<std::string> s;
  for (const auto& c : v) s.push_back(to_string(c));
  return "[" + join(s, " : ") + "]";
}

std::string fmt_coords(const std::vector<size_t>& c) {
  std::vector<std::string> s;
  for (size_t i : c) s.push_back("x" + std::to_string(i));
  return "P[" + join(s, ":") + "]";
}

std::string fmt_support(const std::vector<size_t>& s) {
  std::vector<std::string> p;
  for (size_t i : s) p.push_back("x" + std::to_string(i));
  return "{" + join(p, ",") + "}";
}

std::vector<ParamScalar> parse_point(const std::vector<std::string>& v) {
  std::vector<ParamScalar> r;
  for (const auto& s : v) r.push_back(parse_scalar(s));
  return r;
}

std::vector<size_t> iota_coords(size_t n) {
  std::vector<size_t> r(n);
  for (size_t i = 0; i < n; ++i) r[i] = i;
  return r;
}

bool on_component(const std::vector<ParamScalar>& amb, const std::vector<size_t>& coords) {
  for (size_t i = 0; i < amb.size(); ++i)
    if (!amb[i].is_zero() && std::find(coords.begin(), coords.end(), i) == coords.end()) return false;
  return true;
}

bool proportional(const std::vector<ParamScalar>& amb, const std::vector<size_t>& coords,
                  const std::vector<ParamScalar>& v) {
  if (!on_component(amb, coords)) return false;
  for (size_t a = 0; a < coords.size(); ++a)
    for (size_t b = a + 1; b < coords.size(); ++b)
      if (!(amb[coords[a]] * v[b] == amb[coords[b]] * v[a])) return false;
  return true;
}

// The computed point in the printed normalization (scaled to agree at the last nonzero entry).
std::string fmt_like(const std::vector<ParamScalar>& amb, const std::vector<size_t>& coords,
                     const std::vector<ParamScalar>& like) {
  std::vector<ParamScalar> r;
  for (size_t i : coords) r.push_back(amb[i]);
  try {
    for (size_t k = like.size(); k-- > 0;)
      if (!like[k].is_zero() && r[k].is_unit()) {
        ParamScalar scale = like[k] / r[k];
        for (auto& x : r) x = x * scale;
        break;
      }
  } catch (const std::exception&) {
  }
  return fmt_point(r);
}

// Affine expressions in a few single-letter variables; 'd' stands for a fixed
// rational (the cycle weight delta) unless it is itself a variable.
struct Affine {
  QVec v;
  Rational c = 0;
};

class AffineParser {
 public:
  AffineParser(std::string_view s, std::string names, Rational delta)
      : s_(s), names_(std::move(names)), delta_(delta) {}

  Affine parse() {
    Affine a = expr();
    skip();
    if (i_ != s_.size()) fail();
    return a;
  }

 private:
  [[noreturn]] void fail() const { throw std::invalid_argument("cannot parse linear form '" + std::string(s_) + "'"); }
  void skip() {
    while (i_ < s_.size() && s_[i_] == ' ') ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  Affine zero() const { return {QVec(names_.size(), 0), 0}; }
  static Affine add(Affine a, const Affine& b, int sign) {
    for (size_t i = 0; i < a.v.size(); ++i) a.v[i] += sign * b.v[i];
    a.c += sign * b.c;
    return a;
  }
  static bool constant(const Affine& a) {
    return std::all_of(a.v.begin(), a.v.end(), [](const Rational& x) { return x == 0; });
  }
  Affine mul(const Affine& a, const Affine& b) const {
    const Affine* k = constant(a) ? &a : constant(b) ? &b : nullptr;
    if (!k) fail();
    const Affine& o = k == &a ? b : a;
    Affine r = o;
    for (auto& x : r.v) x *= k->c;
    r.c *= k->c;
    return r;
  }
  Affine expr() {
    Affine r = zero();
    int sign = eat('-') ? -1 : (eat('+'), 1);
    r = add(r, term(), sign);
    while (true) {
      if (eat('+')) r = add(r, term(), 1);
      else if (eat('-')) r = add(r, term(), -1);
      else return r;
    }
  }
  bool starts_factor() {
    char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || names_.find(c) != std::string::npos || c == 'd';
  }
  Affine term() {
    Affine r = factor();
    while (eat('*') || starts_factor()) r = mul(r, factor());
    return r;
  }
  Affine factor() {
    char c = peek();
    if (c == '(') {
      ++i_;
      Affine a = expr();
      if (!eat(')')) fail();
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t b = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      Affine a = zero();
      a.c = Rational(mpz_class(std::string(s_.substr(b, i_ - b))));
      return a;
    }
    auto p = names_.find(c);
    if (p != std::string::npos) {
      ++i_;
      Affine a = zero();
      a.v[p] = 1;
      return a;
    }
    if (c == 'd') {
      ++i_;
      Affine a = zero();
      a.c = delta_;
      return a;
    }
    fail();
  }

  std::string_view s_;
  std::string names_;
  Rational delta_;
  size_t i_ = 0;
};

QVec linear_form(const std::string& text, const std::string& names, Rational delta = 0) {
  Affine a = AffineParser(text, names, delta).parse();
  if (a.c != 0) throw std::invalid_argument("inhomogeneous form '" + text + "'");
  return a.v;
}

struct Condition {
  QVec normal;
  char op;  // '<', '>', '='
  bool holds(const QVec& l) const {
    Rational s = 0;
    for (size_t i = 0; i < l.size(); ++i) s += normal[i] * l[i];
    return op == '<' ? s < 0 : op == '>' ? s > 0 : s == 0;
  }
};

std::vector<Condition> parse_cone(const std::string& text, const std::string& names) {
  std::vector<Condition> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto p = part.find_first_of("<>=");
    if (p == std::string::npos) throw std::invalid_argument("bad cone condition '" + part + "'");
    QVec l = linear_form(part.substr(0, p), names), r = linear_form(part.substr(p + 1), names);
    for (size_t i = 0; i < l.size(); ++i) l[i] -= r[i];
    out.push_back({l, part[p]});
  }
  return out;
}

Rational qdot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Integral 1PS in the box [-B, B]^r.
std::vector<QVec> box(size_t r, long B) {
  std::vector<QVec> out;
  QVec cur(r, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == r) {
      out.push_back(cur);
      return;
    }
    for (long x = -B; x <= B; ++x) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

UniPoly to_unipoly(const LaurentPoly& g) {
  long top = -1;
  for (const auto& [e, c] : g.terms()) {
    if (e[0] < 0) throw std::invalid_argument("negative power of s in " + to_string(g));
    top = std::max(top, e[0]);
  }
  std::vector<ParamScalar> c(size_t(top + 1));
  for (const auto& [e, v] : g.terms()) c[size_t(e[0])] = v;
  return UniPoly(c);
}

// g = u * h for a unit u.
bool unit_multiple(const UniPoly& g, const UniPoly& h) {
  if (g.degree() != h.degree() || g.is_zero()) return false;
  const ParamScalar& lg = g[size_t(g.degree())];
  const ParamScalar& lh = h[size_t(h.degree())];
  if (!lg.is_unit() || !lh.is_unit()) return false;
  return g == h * (lg / lh);
}

LaurentPoly strip_monomial(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  IVec lo = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms())
    for (size_t i = 0; i < e.size(); ++i) lo[i] = std::min(lo[i], e[i]);
  return f * LaurentPoly::monomial(-lo);
}

LaurentPoly linear4(const QVec& c) {
  LaurentPoly r(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    IVec e(c.size(), 0);
    e[i] = 1;
    if (c[i] != 0) r.add_term(e, c[i]);
  }
  return r;
}

// ---------------------------------------------------------------- fixture kinds

void potential_fixture(Suite& S, const std::string& id, const std::string& loc, const std::string& entry,
                       const std::string& printed, size_t nvars, const std::string& note = "") {
  S.run(id, loc, [&] {
    LaurentPoly want = parse_laurent(printed, nvars);
    LaurentPoly got = builtin_potential(entry).potential;
    S.add(id, loc, to_string(want), to_string(got), want == got, note);
  });
}

void pencil_fixture(Suite& S, const std::string& id, const std::string& loc, const std::string& entry,
                    const std::vector<std::pair<size_t, std::string>>& coeffs) {
  S.run(id, loc, [&] {
    Pencil p = pencil_from_potential(builtin_potential(entry));
    std::vector<ParamScalar> want(p.member.size());
    for (const auto& [i, c] : coeffs) want.at(i) = parse_scalar(c);
    std::vector<std::string> w, g;
    for (size_t i = 1; i < want.size(); ++i) {
      w.push_back(to_string(want[i]) + "*x" + std::to_string(i));
      g.push_back(to_string(p.member[i]) + "*x" + std::to_string(i));
    }
    S.add(id, loc, "|" + join(w, " + ") + ", x0|", "|" + join(g, " + ") + ", x0|", want == p.member);
  });
}

struct PrintedRelation {
  std::string printed;
  std::string corrected;  // empty unless the printed relation is a misprint
};

void relations_fixture(Suite& S, const std::string& id, const std::string& loc, const std::string& entry,
                       const std::vector<PrintedRelation>& rels) {
  S.run(id, loc, [&] {
    auto e = builtin_potential(entry);
    AnticanonicalEmbedding emb = anticanonical_embedding(e.delta, e.labels);
    for (size_t k = 0; k < rels.size(); ++k) {
      const auto& r = rels[k];
      std::string rid = id + "." + std::to_string(k + 1);
      bool printed_ok = emb.has_relation(parse_binomial(r.printed));
      if (r.corrected.empty()) {
        S.add(rid, loc, r.printed, printed_ok ? "in the ideal" : "not a binomial of the embedding", printed_ok);
      } else {
        bool fixed_ok = emb.has_relation(parse_binomial(r.corrected));
        S.add(rid, loc, r.corrected, fixed_ok ? "in the ideal" : "not a binomial of the embedding",
              fixed_ok && !printed_ok, "printed " + r.printed + ", which is not homogeneous in the lattice grading");
      }
    }
  });
}

struct PrintedPoint {
  std::string label;
  std::vector<size_t> coords;
  std::vector<std::string> printed;
  std::vector<std::string> corrected;  // empty unless the printed point is a misprint
};

void points_fixture(Suite& S, const std::string& id, const std::string& loc, const std::string& entry,
                    const std::vector<PrintedPoint>& pts, bool parameters = true) {
  S.run(id, loc, [&] {
    BaseCycle bc = base_cycle(pencil_from_potential(builtin_potential(entry, parameters)));
    std::set<size_t> used;
    for (const auto& pp : pts) {
      auto P = parse_point(pp.printed);
      auto find = [&](const std::vector<ParamScalar>& v) -> std::optional<size_t> {
        for (size_t i = 0; i < bc.points.size(); ++i)
          if (proportional(bc.points[i].coordinates, pp.coords, v)) return i;
        return std::nullopt;
      };
      auto hit_p = find(P);
      std::optional<size_t> hit = hit_p;
      std::string erratum;
      bool pass;
      std::string expected = fmt_point(P) + " in " + fmt_coords(pp.coords);
      if (pp.corrected.empty()) {
        pass = hit_p.has_value();
      } else {
        auto C = parse_point(pp.corrected);
        hit = find(C);
        pass = hit.has_value() && !hit_p;
        expected = fmt_point(C) + " in " + fmt_coords(pp.coords);
        erratum = "printed " + fmt_point(P) + "; the printed potential gives the corrected value";
      }
      std::string actual;
      if (hit) {
        used.insert(*hit);
        actual = fmt_like(bc.points[*hit].coordinates, pp.coords, pp.corrected.empty() ? P : parse_point(pp.corrected));
      } else {
        std::vector<std::string> cands;
        for (const auto& bp : bc.points)
          if (on_component(bp.coordinates, pp.coords)) cands.push_back(fmt_like(bp.coordinates, pp.coords, P));
        actual = cands.empty() ? "no computed point on " + fmt_coords(pp.coords)
                               : "computed points on this component: " + join(cands, ", ");
      }
      S.add(id + "." + pp.label, loc, expected, actual, pass, erratum);
    }
    S.add(id + ".count", loc, std::to_string(pts.size()) + " distinct points",
          std::to_string(bc.points.size()) + " computed, " + std::to_string(used.size()) + " matched",
          bc.points.size() == pts.size() && used.size() == pts.size());
  });
}

struct PrintedRestriction {
  std::string label;
  std::vector<std::pair<size_t, long>> param;  // coordinate -> power of s on the chart t = 1
  std::string printed;                           // product in s, up to a unit
  std::string corrected;
};

void restriction_fixture(Suite& S, const std::string& id, const std::string& loc, const std::string& entry,
                         const std::vector<PrintedRestriction>& rs) {
  S.run(id, loc, [&] {
    Pencil p = pencil_from_potential(builtin_potential(entry));
    auto as_x = [](std::string s) {
      std::replace(s.begin(), s.end(), 's', 'x');
      return s;
    };
    for (const auto& r : rs) {
      LaurentPoly g(1);
      for (const auto& [i, k] : r.param) g.add_term(IVec{k}, p.member.at(i));
      UniPoly ours = to_unipoly(g);
      UniPoly printed = to_unipoly(parse_laurent(as_x(r.printed), 1));
      bool ok_p = unit_multiple(ours, printed);
      if (r.corrected.empty()) {
        S.add(id + "." + r.label, loc, r.printed + " (up to a unit)", to_string(ours), ok_p);
      } else {
        UniPoly fixed = to_unipoly(parse_laurent(as_x(r.corrected), 1));
        S.add(id + "." + r.label, loc, r.corrected + " (up to a unit)", to_string(ours),
              unit_multiple(ours, fixed) && !ok_p, "printed " + r.printed);
      }
    }
  });
}

struct TableRow {
  std::string cone;
  std::vector<std::vector<size_t>> limits;
  std::string ch;
  std::string corrected_ch;
};

struct TableSpec {
  TorusAction action;
  std::string names;
  Rational delta = 0;
  WeightedCycle cycle;
};

// Every integral 1PS in a box inside the printed cone must give the printed
// limit supports and the printed Chow weight.
void table_fixture(Suite& S, const std::string& id, const std::string& loc, const TableSpec& T,
                   const std::vector<TableRow>& rows) {
  for (size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    std::string rid = id + "." + std::to_string(k + 1);
    std::string rloc = loc + " (" + row.cone + ")";
    S.run(rid, rloc, [&] {
      auto cone = parse_cone(row.cone, T.names);
      QVec printed = linear_form(row.ch, T.names, T.delta);
      QVec want = row.corrected_ch.empty() ? printed : linear_form(row.corrected_ch, T.names, T.delta);
      std::vector<std::string> lim;
      for (const auto& l : row.limits) lim.push_back(fmt_support(l));
      std::string expected = join(lim, "") + ", Ch = " + T.action.form_string(want);
      size_t n = 0;
      bool ok = true, printed_agrees = true;
      std::string actual;
      for (const auto& lambda : box(T.action.rank, 5)) {
        if (!std::all_of(cone.begin(), cone.end(), [&](const Condition& c) { return c.holds(lambda); })) continue;
        ++n;
        std::vector<std::string> got;
        bool lim_ok = true;
        for (size_t i = 0; i < T.cycle.points.size(); ++i) {
          auto lw = limit_and_weight(T.cycle.points[i], lambda, T.action);
          got.push_back(fmt_support(lw.support));
          if (i >= row.limits.size() || lw.support != row.limits[i]) lim_ok = false;
        }
        Rational w = chow_weight(T.cycle, lambda, T.action);
        if (w != qdot(printed, lambda)) printed_agrees = false;
        if ((!lim_ok || w != qdot(want, lambda)) && ok) {
          ok = false;
          actual = "at 1PS " + to_string(lambda) + ": " + join(got, "") + ", Ch = " + to_string(w);
        }
      }
      if (n == 0) {
        ok = false;
        actual = "no integral 1PS in the printed cone";
      } else if (ok) {
        actual = expected + " on " + std::to_string(n) + " 1PS";
      }
      std::string erratum;
      if (!row.corrected_ch.empty()) {
        erratum = "printed Ch = " + row.ch;
        ok = ok && !printed_agrees;
      }
      S.add(rid, rloc, expected, actual, ok, erratum);
    });
  }
}

void verdict_fixture(Suite& S, const std::string& id, const std::string& loc, const TableSpec& T, Verdict want,
                     const std::string& erratum = "") {
  S.run(id, loc, [&] {
    ChamberScan scan = chamber_scan(T.cycle, T.action);
    S.add(id, loc, to_string(want), to_string(scan.verdict) + " (" + scan.reason + ")", scan.verdict == want,
          erratum);
  });
}

// Cycle from computed base points, picked by their supports.
WeightedCycle cycle_from(const BaseCycle& bc, const std::vector<std::vector<size_t>>& supports) {
  WeightedCycle c;
  for (const auto& s : supports) {
    bool found = false;
    for (const auto& bp : bc.points) {
      CyclePoint p{bp.coordinates, bp.multiplicity, ""};
      if (p.support() == s) {
        c.points.push_back(p);
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("no computed base point with support " + fmt_support(s));
  }
  return c;
}

struct FacetFix {
  std::string label;
  std::string sum;
  std::string corrected;            // empty unless the printed sum is a misprint
  std::vector<std::string> factors;  // empty: no printed factorization
  std::string unit = "1";
};

void facets_fixture(Suite& S, const std::string& id, const std::string& loc, const std::string& entry,
                    const std::vector<FacetFix>& fs) {
  S.run(id, loc, [&] {
    LaurentPoly f = builtin_potential(entry).potential;
    auto facets = faces(f.newton_polytope(), int(f.nvars()) - 1);
    std::set<IVec> used;
    for (const auto& fx : fs) {
      LaurentPoly printed = parse_laurent(fx.sum, f.nvars());
      auto find = [&](const LaurentPoly& g) -> const FaceDescriptor* {
        for (const auto& F : facets)
          if (face_restriction(f, F) == g) return &F;
        return nullptr;
      };
      const FaceDescriptor* hit_p = find(printed);
      const FaceDescriptor* hit = hit_p;
      std::string erratum, expected = to_string(printed);
      bool pass = hit_p != nullptr;
      if (!fx.corrected.empty()) {
        LaurentPoly fixed = parse_laurent(fx.corrected, f.nvars());
        hit = find(fixed);
        pass = hit && !hit_p;
        expected = to_string(fixed);
        erratum = "printed " + to_string(printed);
      }
      std::string actual;
      if (hit) {
        used.insert(hit->normal);
        actual = "facet with normal " + to_string(hit->normal);
      } else {
        // closest facet by shared support
        size_t best = 0, score = 0;
        for (size_t i = 0; i < facets.size(); ++i) {
          auto g = face_restriction(f, facets[i]);
          size_t sc = 0;
          for (const auto& [e, c] : printed.terms()) sc += !g.coeff(e).is_zero();
          if (sc > score) score = sc, best = i;
        }
        actual = "no facet; closest " + to_string(facets[best].normal) + ": " +
                 to_string(face_restriction(f, facets[best]));
      }
      S.add(id + "." + fx.label, loc, expected, actual, pass, erratum);
      if (!fx.factors.empty()) {
        std::vector<LaurentPoly> claimed;
        std::vector<std::string> shown;
        for (const auto& t : fx.factors) {
          claimed.push_back(parse_laurent(t, f.nvars()));
          shown.push_back("(" + t + ")");
        }
        LaurentPoly unit = parse_laurent(fx.unit, f.nvars());
        bool ok = hit && verify_facet_factorization(f, *hit, claimed, unit);
        S.add(id + "." + fx.label + ".factors", loc, join(shown, "") + " * " + to_string(unit),
              ok ? "product equals the facet sum" : "product differs from the facet sum", ok);
      }
    }
    S.add(id + ".distinct", loc, std::to_string(fs.size()) + " distinct facets of " + std::to_string(facets.size()),
          std::to_string(used.size()) + " matched", used.size() == fs.size());
  });
}

LaurentPoly product_form(const std::vector<std::pair<QVec, int>>& factors) {
  LaurentPoly r = LaurentPoly::constant(factors.front().first.size(), 1);
  for (const auto& [l, k] : factors) r = r * linear4(l).pow(k);
  return r;
}

// ---------------------------------------------------------------- suites

const std::string kF_S6 = "x + y + e^{-a0}/(x*y) + e^{-a0-a3}/x + e^{-a0-a1}/y + e^{-a2}*x*y";

void suite_polytope(Suite& S) {
  const std::string loc = "reflexive polygons, polar duality";
  S.run("dual.P3", loc, [&] {
    auto d = polar_dual(catalog("P3"));
    bool ok = d.polytope && lattice_equivalent(*d.polytope, catalog("P9"));
    S.add("dual.P3", loc, "P3 dual ~ P9", ok ? "P3 dual ~ P9" : "not equivalent to P9", ok);
  });
  for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"P6a", "P6a"}, {"P4a", "P8a"}, {"P4b", "P8b"}, {"P9", "P3"}}) {
    std::string id = "dual." + a;
    S.run(id, loc, [&] {
      auto d = polar_dual(catalog(a));
      bool ok = d.polytope && lattice_equivalent(*d.polytope, catalog(b));
      S.add(id, loc, a + " dual ~ " + b, ok ? a + " dual ~ " + b : "not equivalent to " + b, ok);
    });
  }
  for (const auto& n : polygon_names()) {
    std::string id = "involution." + n;
    S.run(id, loc, [&] {
      auto P = catalog(n);
      auto d = polar_dual(P);
      bool ok = d.polytope && is_reflexive(P) && polar_dual(*d.polytope).polytope == P;
      S.add(id, loc, "reflexive, dual of dual = " + n, ok ? "ok" : "involution fails", ok);
    });
  }
  const std::string dloc = "surface mirrors, degree of the base cycle";
  for (const auto& id : potential_ids()) {
    auto e = builtin_potential(id);
    if (e.delta.rank() != 2) continue;
    S.run("degree." + id, dloc, [&] {
      BaseCycle bc = base_cycle(pencil_from_potential(e));
      long vol = normalized_volume(e.delta);
      S.add("degree." + id, dloc, "total multiplicity " + std::to_string(vol),
            "total multiplicity " + std::to_string(bc.total_multiplicity()), bc.total_multiplicity() == vol);
    });
  }
}

void suite_p2(Suite& S) {
  potential_fixture(S, "potential", "P2 mirror, Givental potential", "P2", "x + y + e^{-a0}/(x*y)", 2);
  pencil_fixture(S, "pencil", "P2 mirror, anticanonical pencil", "P2", {{1, "1"}, {2, "1"}, {3, "e^{-a0}"}});
  relations_fixture(S, "relations", "P2 mirror, singular cubic surface", "P2", {{"x1*x2*x3 = x0^3", ""}});
  points_fixture(S, "points", "P2 mirror, base locus", "P2",
                 {{"p1", iota_coords(4), {"0", "0", "1", "-e^{a0}"}, {}},
                  {"p2", iota_coords(4), {"0", "1", "0", "-e^{a0}"}, {}},
                  {"p3", iota_coords(4), {"0", "1", "-1", "0"}, {}}});

  const std::string bloc = "P2 mirror, balancing in the global quotient";
  for (auto [name, a0] : std::vector<std::pair<std::string, double>>{{"0", 0}, {"1/2", 0.5}, {"1", 1}, {"2", 2}}) {
    std::string id = "balance.a0=" + name;
    S.run(id, bloc, [&, a0 = a0] {
      double lam = balance_solve(p2_quotient_points(a0));
      double want = std::exp(a0 / 9);
      char buf[96];
      std::snprintf(buf, sizeof buf, "|lambda| = %.12f", want);
      std::string e = buf;
      std::snprintf(buf, sizeof buf, "|lambda| = %.12f", lam);
      S.add(id, bloc, e + " (tol 1e-9)", buf, std::fabs(lam - want) <= 1e-9);
    });
  }
  S.run("balance.identity", bloc, [&] {
    auto m = moment_balance(p2_quotient_points(0), 1, 1);
    char buf[96];
    std::snprintf(buf, sizeof buf, "sum mu = (%.3g, %.3g)", std::fabs(m[0]) < 1e-12 ? 0.0 : m[0],
                  std::fabs(m[1]) < 1e-12 ? 0.0 : m[1]);
    S.add("balance.identity", bloc, "sum mu = (0, 0) at a0 = 0", buf,
          std::fabs(m[0]) < 1e-12 && std::fabs(m[1]) < 1e-12);
  });

  const std::string tloc = "P2 mirror, Hilbert-Mumford table";
  S.run("table", tloc, [&] {
    BaseCycle bc = base_cycle(pencil_from_potential(builtin_potential("P2")));
    TableSpec T{TorusAction(2, {{0, 0}, {3, 0}, {-3, 3}, {0, -3}}), "ab", 0, cycle_from(bc, {{2, 3}, {1, 3}, {1, 2}})};
    table_fixture(S, "table", tloc, T,
                  {{"a > -b, -a + b > -b, a > -a + b", {{3}, {3}, {2}}, "-3(a+b)", ""},
                   {"a > -b, -a + b > -b, a < -a + b", {{3}, {3}, {1}}, "3(a - 2b)", ""},
                   {"a > -b, -a + b < -b, a > -a + b", {{2}, {3}, {2}}, "3(-2a + b)", ""},
                   {"a < -b, -a + b > -b, a < -a + b", {{3}, {1}, {1}}, "3(2a - b)", ""},
                   {"a < -b, -a + b < -b, a > -a + b", {{2}, {1}, {2}}, "3(-a + 2b)", ""},
                   {"a < -b, -a + b < -b, a < -a + b", {{2}, {1}, {1}}, "3(a + b)", ""}});
    verdict_fixture(S, "verdict", tloc, T, Verdict::Stable);
  });
}

TableSpec s6_spec(const std::vector<std::vector<size_t>>& supports) {
  BaseCycle bc = base_cycle(pencil_from_potential(builtin_potential("S6")));
  return {TorusAction(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}), "ab", 0,
          cycle_from(bc, supports)};
}

void suite_s6(Suite& S) {
  potential_fixture(S, "potential", "S6 mirror, inductive potential", "S6", kF_S6, 2);
  pencil_fixture(S, "pencil", "S6 mirror, anticanonical pencil", "S6",
                 {{1, "1"}, {2, "e^{-a2}"}, {3, "1"}, {4, "e^{-a0-a3}"}, {5, "e^{-a0}"}, {6, "e^{-a0-a1}"}});
  std::vector<PrintedRelation> rels;
  for (size_t i = 1; i <= 6; ++i) {
    size_t prev = i == 1 ? 6 : i - 1, next = i == 6 ? 1 : i + 1;
    rels.push_back({"x" + std::to_string(prev) + "*x" + std::to_string(next) + " = x0*x" + std::to_string(i), ""});
  }
  for (size_t i = 1; i <= 3; ++i) rels.push_back({"x" + std::to_string(i) + "*x" + std::to_string(i + 3) + " = x0^2", ""});
  relations_fixture(S, "relations", "S6 mirror, quadrics of the anticanonical model", "S6", rels);
  points_fixture(S, "points", "S6 mirror, base locus", "S6",
                 {{"p1", iota_coords(7), {"0", "1", "-e^{a2}", "0", "0", "0", "0"}, {}},
                  {"p2", iota_coords(7), {"0", "0", "1", "-e^{-a2}", "0", "0", "0"}, {}},
                  {"p3", iota_coords(7), {"0", "0", "0", "1", "-e^{a0+a3}", "0", "0"}, {}},
                  {"p4", iota_coords(7), {"0", "0", "0", "0", "1", "-e^{-a3}", "0"}, {}},
                  {"p5", iota_coords(7), {"0", "0", "0", "0", "0", "1", "-e^{a1}"}, {}},
                  {"p6", iota_coords(7), {"0", "1", "0", "0", "0", "0", "-e^{a1}"},
                   {"0", "1", "0", "0", "0", "0", "-e^{a0+a1}"}}});
  const std::string tloc = "S6 mirror, Kempf-Ness lemma table";
  S.run("table", tloc, [&] {
    TableSpec T = s6_spec({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    table_fixture(S, "table", tloc, T,
                  {{"a > 0, b > 0", {{1}, {3}, {4}, {5}, {5}, {6}}, "-2(a+b)", ""},
                   {"a < 0, b < 0", {{2}, {2}, {3}, {4}, {6}, {1}}, "2b", "2(a+b)"},
                   {"a > 0, b < 0, a + b > 0", {{2}, {3}, {4}, {4}, {5}, {6}}, "-2a", ""},
                   {"a > 0, b < 0, a + b < 0", {{2}, {3}, {3}, {4}, {5}, {1}}, "2b", ""},
                   {"a < 0, b > 0, a + b > 0", {{1}, {2}, {4}, {5}, {6}, {6}}, "-b", "-2b"},
                   {"a < 0, b > 0, a + b < 0", {{1}, {2}, {3}, {5}, {6}, {1}}, "2a", ""},
                   {"a = 0, b > 0", {{1}, {2, 3}, {4}, {5}, {5, 6}, {6}}, "-2b", ""},
                   {"a = 0, b < 0", {{2}, {2, 3}, {3}, {4}, {5, 6}, {1}}, "2b", ""},
                   {"a > 0, b = 0", {{1, 2}, {3}, {4}, {4, 5}, {5}, {6}}, "-2a", ""},
                   {"a < 0, b = 0", {{1, 2}, {2}, {3}, {4, 5}, {6}, {1}}, "2a", ""}});
    verdict_fixture(S, "verdict", tloc, T, Verdict::Stable);
  });
}

const std::string kF_S3 =
    "e^{-a2-a4}*x*y^2 + e^{-a0-a1-a5}*x/y + e^{-2a0-a3-a6}/(x^2*y)"
    " + e^{-2a0-a2-a3-a4-a6}*(e^{a0+a2+a3+a4} + e^{a0+a2+a4+a6} + 1)/x"
    " + e^{-a0-a2-a3-a4-a6}*(e^{a0+a2+a3+a4+a6} + e^{a3} + e^{a6})*y"
    " + e^{-a0-a1-a2-a4-a5}*(e^{a0+a1+a2+a5} + e^{a0+a1+a4+a5} + 1)*x*y"
    " + e^{-a0-a1-a2-a4-a5}*(e^{a0+a1+a2+a4+a5} + e^{a2} + e^{a4})*x"
    " + e^{-2a0-a1-a3-a5-a6}*(e^{a0+a1+a3+a6} + e^{a0+a3+a5+a6} + 1)/y"
    " + e^{-2a0-a1-a3-a5-a6}*(e^{a0+a1+a3+a5+a6} + e^{a1} + e^{a5})/(x*y)";

// Interior boundary coefficients at a = 0 are binomial coefficients.
void binomial_fixture(Suite& S, const std::string& id, const std::string& loc, const std::string& entry) {
  S.run(id, loc, [&] {
    auto e = builtin_potential(entry, false);
    std::vector<std::string> bad;
    size_t checked = 0;
    for (const auto& E : faces(e.delta, 1)) {
      long k = long(E.points.size()) - 1;
      mpz_class binom = 1;
      for (long i = 1; i < k; ++i) {
        binom = binom * (k - i + 1) / i;
        ++checked;
        ParamScalar c = e.potential.coeff(E.points[size_t(i)]);
        if (!(c == ParamScalar(Rational(binom)))) bad.push_back(to_string(E.points[size_t(i)]) + " -> " + to_string(c));
      }
    }
    S.add(id, loc, "C(k, i) at every interior edge point",
          bad.empty() ? std::to_string(checked) + " points checked" : join(bad, "; "), bad.empty());
  });
}

void suite_s3(Suite& S) {
  potential_fixture(S, "potential", "cubic surface mirror, boundary-corrected potential", "S3", kF_S3, 2);
  binomial_fixture(S, "binomial", "cubic surface mirror, corrections at a = 0", "S3");
  relations_fixture(S, "relations", "cubic surface mirror, Veronese relations", "S3",
                    {{"x1*x2 = x0*x7", ""}, {"x3*x4 = x0*x8", ""}, {"x5*x6 = x0*x9", ""},
                     {"x1*x9 = x6^2", ""}, {"x6*x7 = x1^2", ""}, {"x7*x9 = x1*x6", ""},
                     {"x3*x7 = x2^2", ""}, {"x2*x8 = x3^2", ""}, {"x7*x8 = x2*x3", ""},
                     {"x5*x8 = x4^2", ""}, {"x4*x9 = x5^2", ""}, {"x8*x9 = x4*x5", ""}});
  restriction_fixture(S, "restriction", "cubic surface mirror, restrictions to the twisted cubics", "S3",
                      {{"Q1", {{1, 2}, {6, 1}, {7, 3}, {9, 0}}, "(e^{a0+a3}*s+1)*(e^{a0+a6}*s+1)*(e^{a2+a4}+s)", ""},
                       {"Q2", {{2, 2}, {3, 1}, {7, 3}, {8, 0}}, "(e^{a2}+s)*(e^{a4}+s)*(e^{a0+a1+a5}*s+1)", ""},
                       {"Q3", {{4, 2}, {5, 1}, {8, 3}, {9, 0}}, "(e^{a1}+s)*(e^{a5}+s)*(e^{a0+a3+a6}*s+1)", ""}});
  const std::vector<size_t> q1{1, 6, 7, 9}, q2{2, 3, 7, 8}, q3{4, 5, 8, 9};
  points_fixture(
      S, "points", "cubic surface mirror, base locus arrangement", "S3",
      {{"p1", q1, {"e^{-2a0-2a3}", "-e^{-a0-a3}", "-e^{-3a0-3a3}", "1"}, {}},
       {"p2", q1, {"e^{-2a0-2a6}", "-e^{-a0-a6}", "-e^{-3a0-3a6}", "1"}, {}},
       {"p3", q1, {"e^{-2a2-2a4}", "-e^{-a2-a4}", "-e^{-3a2-3a4}", "1"},
        {"e^{2a2+2a4}", "-e^{a2+a4}", "-e^{3a2+3a4}", "1"}},
       {"p4", q2, {"e^{-2a2}", "-e^{-a2}", "-e^{-3a2}", "1"}, {"e^{2a2}", "-e^{a2}", "-e^{3a2}", "1"}},
       {"p5", q2, {"e^{-2a4}", "-e^{-a4}", "-e^{-3a4}", "1"}, {"e^{2a4}", "-e^{a4}", "-e^{3a4}", "1"}},
       {"p6", q2, {"e^{-2a0-2a1-2a5}", "-e^{-a0-a1-a5}", "-e^{-3a0-3a1-3a5}", "1"}, {}},
       {"p7", q3, {"e^{-2a1}", "-e^{-a1}", "-e^{-3a1}", "1"}, {"e^{2a1}", "-e^{a1}", "-e^{3a1}", "1"}},
       {"p8", q3, {"e^{-2a5}", "-e^{-a5}", "-e^{-3a5}", "1"}, {"e^{2a5}", "-e^{a5}", "-e^{3a5}", "1"}},
       {"p9", q3, {"e^{-2a0-2a3-2a6}", "-e^{-a0-a3-a6}", "-e^{-3a0-3a3-3a6}", "1"}, {}}});
  const std::string loc0 = "cubic surface mirror, anticanonical class";
  S.run("a=0", loc0, [&] {
    BaseCycle bc = base_cycle(pencil_from_potential(builtin_potential("S3", false)));
    std::vector<std::pair<std::vector<size_t>, std::string>> want{{q1, "p1"}, {q2, "p4"}, {q3, "p7"}};
    std::vector<std::string> got;
    bool ok = bc.points.size() == 3;
    for (const auto& [c, name] : want) {
      bool hit = false;
      for (const auto& bp : bc.points)
        if (proportional(bp.coordinates, c, parse_point({"1", "-1", "-1", "1"}))) {
          hit = bp.multiplicity == 3;
          got.push_back(std::to_string(bp.multiplicity) + name);
        }
      ok = ok && hit;
    }
    S.add("a=0", loc0, "3p1 + 3p4 + 3p7", join(got, " + "), ok);
  });
}

void suite_p4b(Suite& S) {
  potential_fixture(S, "potential", "plane blown up in a point, potential", "P4b",
                    "x + 1/y + e^{-a0}*y/x + e^{-a0-a1}*y", 2);
  pencil_fixture(S, "pencil", "plane blown up in a point, pencil", "P4b",
                 {{1, "1"}, {2, "1"}, {3, "e^{-a0}"}, {4, "e^{-a0-a1}"}});
  relations_fixture(S, "relations", "plane blown up in a point, quadrics", "P4b",
                    {{"x1*x3 = x0*x4", ""}, {"x2*x4 = x0^2", ""}});
  points_fixture(S, "points", "plane blown up in a point, base locus", "P4b",
                 {{"p1", {1, 2}, {"1", "-1"}, {}},
                  {"p2", {2, 3}, {"1", "-e^{-a0}"}, {"1", "-e^{a0}"}},
                  {"p3", {3, 4}, {"1", "-e^{-a1}"}, {"1", "-e^{a1}"}},
                  {"p4", {1, 4}, {"1", "-e^{-a0-a1}"}, {"1", "-e^{a0+a1}"}}});
  // q'2 sits at the torus-fixed point of weight -(a+b), coordinate x5 of the S6 model.
  const std::string tloc = "plane blown up in a point, weighted cycle p1 + p2 + (1+d)q'2 on S6";
  for (auto [dn, d] : std::vector<std::pair<std::string, Rational>>{
           {"1/4", Rational(1, 4)}, {"1/2", Rational(1, 2)}, {"3/4", Rational(3, 4)}}) {
    std::string id = "weighted.d=" + dn;
    S.run(id, tloc, [&, d = d] {
      TableSpec T = s6_spec({{1, 2}, {2, 3}});
      T.delta = d;
      T.cycle.points.push_back(support_point(7, {5}, 1 + d, "q'2"));
      std::string loc = tloc + ", d = " + dn;
      table_fixture(S, id, loc, T,
                    {{"a > 0, b > 0", {{1}, {3}, {5}}, "-d(a+b)", ""},
                     {"a < 0, b < 0", {{2}, {2}, {5}}, "(1-d)(a+b)", ""},
                     {"a > 0, b < 0, a + b > 0", {{2}, {3}, {5}}, "-d a + (1 - d) b", ""},
                     {"a > 0, b < 0, a + b < 0", {{2}, {3}, {5}}, "-d a + (1 - d) b", ""},
                     {"a < 0, b > 0, a + b > 0", {{1}, {2}, {5}}, "(1-d) a - d b", ""},
                     {"a < 0, b > 0, a + b < 0", {{1}, {2}, {5}}, "(1-d) a - d b", ""},
                     {"a = 0, b > 0", {{1}, {2, 3}, {5}}, "-d b", ""},
                     {"a = 0, b < 0", {{2}, {2, 3}, {5}}, "(1-d) b", ""},
                     {"a > 0, b = 0", {{1, 2}, {3}, {5}}, "-d a", ""},
                     {"a < 0, b = 0", {{1, 2}, {2}, {5}}, "(1-d) a", ""}});
      verdict_fixture(S, id + ".verdict", loc, T, Verdict::Stable);
    });
  }
}

// Coefficient of s^i in m_{w0} prod (1 + m_{w_{j+1}}/m_{w_j} s), placed at w_i.
LaurentPoly printed_corrections(const LaurentPoly& ftilde, const std::vector<std::vector<IVec>>& edges) {
  LaurentPoly out(2);
  for (const auto& w : edges) {
    UniPoly g({ftilde.coeff(w[0])});
    for (size_t j = 0; j + 1 < w.size(); ++j)
      g = g * UniPoly({ParamScalar(1), ftilde.coeff(w[j + 1]) / ftilde.coeff(w[j])});
    for (size_t i = 1; i + 1 < w.size(); ++i) out.add_term(w[i], g[i]);
  }
  return out;
}

void suite_s4(Suite& S) {
  const std::string loc = "degree 4 del Pezzo (P8b), boundary-corrected potential";
  S.run("potential", loc, [&] {
    LaurentPoly ftilde = parse_laurent(kF_S6 + " + e^{-a0-a1-a4}*x/y + e^{-2a0-a3-a5}/(x^2*y)", 2);
    LaurentPoly f = parse_laurent("y + e^{-a2}*x*y + e^{-a0-a1-a4}*x/y + e^{-2a0-a3-a5}/(x^2*y)", 2) +
                    printed_corrections(ftilde, {{{1, -1}, {0, -1}, {-1, -1}, {-2, -1}},
                                                 {{1, 1}, {1, 0}, {1, -1}},
                                                 {{-2, -1}, {-1, 0}, {0, 1}}});
    LaurentPoly got = builtin_potential("S4").potential;
    S.add("potential", loc, to_string(f), to_string(got), f == got);
  });
  binomial_fixture(S, "binomial", "degree 4 del Pezzo (P8b), corrections at a = 0", "S4");
  relations_fixture(S, "relations", "degree 4 del Pezzo (P8b), anticanonical model", "S4",
                    {{"x3*x4 = x0*x7", ""}, {"x5*x6 = x0*x8", ""}, {"x1*x8 = x6^2", ""}, {"x2*x7 = x3^2", ""},
                     {"x5*x7 = x4^2", ""}, {"x4*x8 = x5^2", ""}, {"x7*x8 = x4*x5", ""}});
  restriction_fixture(
      S, "restriction", "degree 4 del Pezzo (P8b), restrictions to the boundary", "S4",
      {{"C1", {{1, 1}, {2, 0}}, "e^{-a2}+s", ""},
       {"C2", {{2, 2}, {3, 1}, {7, 0}}, "(e^{a2}+s)*(s*e^{a0+a1+a4}+1)", ""},
       {"C3", {{1, 2}, {6, 1}, {8, 0}}, "(s*e^{a0+a1}+1)*(s*e^{a0+a3+a5}+e^{a1})", "(s*e^{a0+a5}+1)*(s*e^{a0+a3}+1)"},
       {"C4", {{4, 2}, {5, 1}, {7, 3}, {8, 0}}, "(e^{a1}+s)*(e^{a4}+s)*(s*e^{a0+a3+a5}+1)", ""}});
  const std::vector<size_t> c2{2, 3, 7}, c3{1, 6, 8}, c4{4, 5, 7, 8};
  points_fixture(S, "points", "degree 4 del Pezzo (P8b), base locus arrangement", "S4",
                 {{"p1", {1, 2}, {"e^{-a2}", "1"}, {"-e^{-a2}", "1"}},
                  {"p2", c2, {"e^{2a2}", "-e^{a2}", "1"}, {}},
                  {"p3", c2, {"e^{-2a0-2a1-2a4}", "-e^{-a0-a1-a4}", "1"}, {}},
                  // printed with a stray s for e in the first entry
                  {"p4", c3, {"e^{-2a0-2a1}", "-e^{-a0-a1}", "1"}, {"e^{-2a0-2a5}", "-e^{-a0-a5}", "1"}},
                  {"p5", c3, {"e^{2a1-2a0-2a3-2a5}", "-e^{a1-a0-a3-a5}", "1"}, {"e^{-2a0-2a3}", "-e^{-a0-a3}", "1"}},
                  {"p6", c4, {"e^{2a1}", "-e^{a1}", "-e^{3a1}", "1"}, {}},
                  {"p7", c4, {"e^{2a4}", "-e^{a4}", "-e^{3a4}", "1"}, {}},
                  {"p8", c4, {"e^{-2a0-2a3-2a5}", "-e^{-a0-a3-a5}", "-e^{-3a0-3a3-3a5}", "1"}, {}}});
}

void suite_p4a(Suite& S) {
  potential_fixture(S, "potential", "product of two lines, potential", "P4a", "x + e^{-a0}/x + y + e^{-a1}/y", 2, "");
  pencil_fixture(S, "pencil", "product of two lines, pencil (a, b read as a0, a1)", "P4a",
                 {{1, "1"}, {2, "1"}, {3, "e^{-a1}"}, {4, "e^{-a0}"}});
  relations_fixture(S, "relations", "product of two lines, quadrics", "P4a",
                    {{"x1*x3 = x0^2", ""}, {"x2*x4 = x0^2", ""}});
  points_fixture(S, "points", "product of two lines, base locus (a, b read as a0, a1)", "P4a",
                 {{"p1", {1, 2}, {"1", "-1"}, {}},
                  {"p2", {1, 4}, {"1", "-e^{a0}"}, {}},
                  {"p3", {3, 4}, {"1", "-e^{a0-a1}"}, {}},
                  {"p4", {2, 3}, {"1", "-e^{a1}"}, {}}});
  const std::string tloc = "product of two lines, Hilbert-Mumford table";
  S.run("table", tloc, [&] {
    BaseCycle bc = base_cycle(pencil_from_potential(builtin_potential("P4a")));
    TableSpec T{TorusAction(2, {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}), "rs", 0,
                cycle_from(bc, {{1, 2}, {1, 4}, {3, 4}, {2, 3}})};
    table_fixture(S, "table", tloc, T,
                  {{"r > s, r + s > 0", {{2}, {4}, {3}, {3}}, "(s - r) - (r + s)", ""},
                   {"r > s, r + s < 0", {{2}, {1}, {3}, {2}}, "(s - r) + (r + s)", ""},
                   {"r < s, r + s > 0", {{1}, {4}, {4}, {3}}, "(r - s) - (r + s)", ""},
                   {"r < s, r + s < 0", {{1}, {1}, {4}, {2}}, "(r - s) + (r + s)", ""},
                   {"r = s, r > 0", {{1, 2}, {4}, {3, 4}, {3}}, "-2r", ""},
                   {"r = s, r < 0", {{1, 2}, {1}, {3, 4}, {2}}, "2r", ""}});
    verdict_fixture(S, "verdict", tloc, T, Verdict::Stable);
  });
}

void suite_p8a(Suite& S) {
  const std::string loc = "degree 4 del Pezzo (P8a), boundary-corrected potential";
  S.run("potential", loc, [&] {
    LaurentPoly ftilde = parse_laurent(kF_S6 + " + e^{-a0-a3-a4}*y/x + e^{-a0-a1-a5}*x/y", 2);
    LaurentPoly f = parse_laurent("e^{-a0-a3-a4}*y/x + e^{-a2}*x*y + e^{-a0-a1-a5}*x/y + e^{-a0}/(x*y)", 2) +
                    printed_corrections(ftilde, {{{-1, 1}, {0, 1}, {1, 1}},
                                                 {{1, 1}, {1, 0}, {1, -1}},
                                                 {{1, -1}, {0, -1}, {-1, -1}},
                                                 {{-1, -1}, {-1, 0}, {-1, 1}}});
    LaurentPoly got = builtin_potential("P8a").potential;
    S.add("potential", loc, to_string(f), to_string(got), f == got);
  });
  binomial_fixture(S, "binomial", "degree 4 del Pezzo (P8a), corrections at a = 0", "P8a");
  relations_fixture(S, "relations", "degree 4 del Pezzo (P8a), anticanonical model", "P8a",
                    {{"x2*x7 = x1^2", ""}, {"x2*x8 = x3^2", ""}, {"x5*x8 = x4^2", ""}, {"x5*x7 = x6^2", ""},
                     {"x7*x8 = x0^2", ""}, {"x1*x6 = x0*x8", "x1*x6 = x0*x7"}, {"x3*x4 = x0*x7", "x3*x4 = x0*x8"}});
  restriction_fixture(
      S, "restriction", "degree 4 del Pezzo (P8a), restrictions to the boundary conics", "P8a",
      {{"C1", {{1, 1}, {2, 2}, {7, 0}}, "(e^{a2}+s)*(s*e^{a0+a3+a4}+1)", ""},
       {"C2", {{2, 2}, {3, 1}, {8, 0}}, "(e^{a2}+s)*(s*e^{a0+a1+a5}+1)", ""},
       {"C3", {{4, 1}, {5, 2}, {8, 0}}, "(e^{a3}*s+1)*(s*e^{a1+a5}+e^{a3})", "(e^{a1}*s+1)*(e^{a5}*s+1)"},
       {"C4", {{5, 2}, {6, 1}, {7, 0}}, "(e^{a1}*s+1)*(e^{a1}+s*e^{a3+a4})", "(e^{a3}*s+1)*(e^{a4}*s+1)"}});
  const std::vector<size_t> c1{1, 2, 7}, c2{2, 3, 8}, c3{4, 5, 8}, c4{5, 6, 7};
  points_fixture(S, "points", "degree 4 del Pezzo (P8a), base locus", "P8a",
                 {{"p1", c1, {"-e^{a2}", "e^{2a2}", "1"}, {}},
                  {"p2", c1, {"-e^{-a0-a3-a4}", "e^{-2a0-2a3-2a4}", "1"}, {}},
                  {"p3", c2, {"e^{2a2}", "-e^{a2}", "1"}, {}},
                  {"p4", c2, {"e^{-2a0-2a1-2a5}", "-e^{-a0-a1-a5}", "1"}, {}},
                  {"p5", c3, {"-e^{-a3}", "e^{-2a3}", "1"}, {"-e^{-a1}", "e^{-2a1}", "1"}},
                  {"p6", c3, {"-e^{-a1+a3-a5}", "e^{-2a1+2a3-2a5}", "1"}, {"-e^{-a5}", "e^{-2a5}", "1"}},
                  {"p7", c4, {"e^{-2a1}", "-e^{-a1}", "1"}, {"e^{-2a3}", "-e^{-a3}", "1"}},
                  {"p8", c4, {"e^{2a1-2a3-2a4}", "-e^{a1-a3-a4}", "1"}, {"e^{-2a4}", "-e^{-a4}", "1"}}});
}

void suite_p4c(Suite& S) {
  potential_fixture(S, "potential", "quadric cone, potential (a, b read as a0, a1)", "Q-cone",
                    "y + e^{-a0}/(x*y) + (e^{-a0} + e^{-a1})/y + e^{-a1}*x/y", 2);
  pencil_fixture(S, "pencil", "quadric cone, pencil", "Q-cone",
                 {{1, "1"}, {2, "e^{-a1}"}, {3, "e^{-a0} + e^{-a1}"}, {4, "e^{-a0}"}});
  relations_fixture(S, "relations", "quadric cone, anticanonical model", "Q-cone",
                    {{"x1*x3 = x0^2", ""}, {"x2*x4 = x3^2", ""}});
  points_fixture(S, "points", "quadric cone, base locus (a, b read as a0, a1)", "Q-cone",
                 {{"p1", {1, 4}, {"1", "-e^{a0}"}, {}},
                  {"p2", {1, 2}, {"1", "-e^{a1}"}, {}},
                  {"p3", {2, 3, 4}, {"1", "-1", "1"}, {}},
                  {"p4", {2, 3, 4}, {"1", "-e^{a0-a1}", "e^{2a0-2a1}"}, {}}});
}

void suite_p5a(Suite& S) {
  potential_fixture(S, "potential", "degree 7 del Pezzo, potential", "S7",
                    "x + y + e^{-a0}/(x*y) + e^{-a0-a1}/y + e^{-a2}*x*y", 2);
  pencil_fixture(S, "pencil", "degree 7 del Pezzo, pencil", "S7",
                 {{1, "1"}, {2, "e^{-a2}"}, {3, "1"}, {4, "e^{-a0-a1}"}, {5, "e^{-a0}"}});
  points_fixture(S, "points", "degree 7 del Pezzo, base locus", "S7",
                 {{"p1", {1, 2}, {"1", "-e^{a2}"}, {}},
                  {"p2", {2, 3}, {"1", "-e^{-a2}"}, {}},
                  {"p3", {1, 4}, {"1", "-e^{a0+a1}"}, {}},
                  {"p4", {4, 5}, {"1", "-e^{-a1}"}, {}},
                  {"p5", {3, 5}, {"1", "-e^{a0}"}, {}}});
}

void suite_p5b(Suite& S) {
  potential_fixture(S, "potential", "degree 7 del Pezzo, Gorenstein degeneration, potential", "S7-P5b",
                    "x + y + e^{-a0}/(x*y) + (e^{-a0-a1} + e^{-a0-a2})/y + e^{-a0-a1-a2}*x/y", 2);
  pencil_fixture(S, "pencil", "degree 7 del Pezzo, Gorenstein degeneration, pencil", "S7-P5b",
                 {{1, "1"}, {2, "1"}, {3, "e^{-a0-a1-a2}"}, {4, "e^{-a0-a1} + e^{-a0-a2}"}, {5, "e^{-a0}"}});
  relations_fixture(S, "relations", "degree 7 del Pezzo, Gorenstein degeneration, anticanonical model", "S7-P5b",
                    {{"x1*x4 = x0^2", ""}, {"x3*x5 = x4^2", ""}, {"x1*x3 = x0*x2", ""}, {"x2*x5 = x0*x4", ""}});
  points_fixture(S, "points", "degree 7 del Pezzo, Gorenstein degeneration, base locus", "S7-P5b",
                 {{"p1", {3, 4, 5}, {"1", "-e^{-a1}", "e^{-2a1}"}, {}},
                  {"p2", {3, 4, 5}, {"1", "-e^{-a2}", "e^{-2a2}"}, {}},
                  {"p3", {1, 2}, {"1", "-1"}, {}},
                  {"p4", {1, 5}, {"1", "-e^{a0}"}, {}},
                  {"p5", {2, 3}, {"1", "-e^{a0+a1+a2}"}, {}}});
}

const std::vector<PrintedPoint> kP6bPoints{
    {"p1", {1, 6}, {"1", "-e^{a3}"}, {}},
    {"p2", {2, 3, 6}, {"-e^{-a0-a1-a2}", "1", "e^{-2a0-2a1-2a2}"}, {}},
    {"p3", {2, 3, 6}, {"-e^{a3}", "1", "e^{2a3}"}, {}},
    {"p4", {3, 4, 5}, {"1", "-e^{-a1}", "e^{-2a1}"}, {}},
    {"p5", {3, 4, 5}, {"1", "-e^{-a2}", "e^{-2a2}"}, {}}};

void suite_p6b(Suite& S) {
  pencil_fixture(S, "pencil", "degree 6 del Pezzo, P6b degeneration, rational pencil", "S6-P6b",
                 {{1, "1"}, {2, "1 + e^{-a0-a1-a2-a3}"}, {3, "e^{-a0-a1-a2}"}, {4, "e^{-a0-a1} + e^{-a0-a2}"},
                  {5, "e^{-a0}"}, {6, "e^{-a3}"}});
  auto pts = kP6bPoints;
  pts.push_back({"p6", {1, 5}, {"1", "-e^{a0}"}, {}});
  points_fixture(S, "points", "degree 6 del Pezzo, P6b degeneration, base locus", "S6-P6b", pts);
}

void suite_p7a(Suite& S) {
  pencil_fixture(S, "pencil", "degree 5 del Pezzo, P7a degeneration, rational pencil", "S5-P7a",
                 {{1, "1"}, {2, "1 + e^{-a0-a1-a2-a3}"}, {3, "e^{-a0-a1-a2}"}, {4, "e^{-a0-a1} + e^{-a0-a2}"},
                  {5, "e^{-a0}"}, {6, "e^{-a3}"}, {7, "e^{-a0-a4}"}});
  auto pts = kP6bPoints;
  pts.push_back({"p6", {5, 7}, {"1", "-e^{a4}"}, {}});
  pts.push_back({"p7", {1, 7}, {"1", "-e^{a0+a4}"}, {}});
  points_fixture(S, "points", "degree 5 del Pezzo, P7a degeneration, base locus", "S5-P7a", pts);
}

TorusAction sl4_torus() { return TorusAction(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}); }

// "a+d" with d = -a-b-c.
QVec sl_form(const std::string& text) {
  QVec v = linear_form(text, "abcd");
  return {v[0] - v[3], v[1] - v[3], v[2] - v[3]};
}

void suite_v4(Suite& S) {
  potential_fixture(S, "potential", "quartic threefold, Minkowski potential", "V4", "(x + y + z + 1)^4/(x*y*z)", 3);
  const std::string cloc = "quartic threefold, components of the base locus";
  S.run("components", cloc, [&] {
    auto cp = chart_pencil(builtin_potential("V4").potential, standard_chart(3));
    auto comps = plane_components(cp);
    for (size_t i = 0; i < 4; ++i) {
      QVec want(4, 1);
      want[i] = 0;
      std::string id = "components.C" + std::to_string(i);
      auto it = std::find_if(comps.begin(), comps.end(), [&](const PlaneComponent& c) { return c.hyperplane == i; });
      bool ok = it != comps.end() && it->linear_form && *it->linear_form == want && it->power == 4;
      std::string actual = it == comps.end() ? "missing"
                           : it->linear_form ? "(" + to_string(linear4(*it->linear_form)) + ")^" + std::to_string(it->power)
                                             : "not a power of a linear form";
      // z-variables print as x, y, z, w-less; show the coefficient vector as well
      S.add(id, cloc, "(" + to_string(want) + " . z)^4 on z" + std::to_string(i) + " = 0",
            it != comps.end() && it->linear_form ? "(" + to_string(*it->linear_form) + " . z)^" + std::to_string(it->power)
                                                 : actual,
            ok);
    }
    auto nodes = component_nodes(comps, 4);
    std::vector<std::tuple<std::string, size_t, size_t, QVec>> want{
        {"p1", 0, 1, {0, 0, 1, -1}}, {"p2", 0, 2, {0, 1, 0, -1}}, {"p3", 0, 3, {0, 1, -1, 0}},
        {"p4", 1, 2, {1, 0, 0, -1}}, {"p5", 1, 3, {1, 0, -1, 0}}, {"p6", 2, 3, {1, -1, 0, 0}}};
    for (const auto& [name, a, b, pt] : want) {
      auto it = std::find_if(nodes.begin(), nodes.end(), [&](const Node& n) { return n.a == a && n.b == b; });
      S.add("nodes." + name, "quartic threefold, nodes of the reduced base locus",
            "C" + std::to_string(a) + " n C" + std::to_string(b) + " = " + to_string(pt),
            it == nodes.end() ? "missing" : to_string(it->point), it != nodes.end() && it->point == pt);
    }
  });

  const std::string ploc = "quartic threefold, Pluecker coordinates of C0 and C3";
  S.run("pluecker.vectors", ploc, [&] {
    TorusAction PA = pluecker_action(sl4_torus());
    WeightedCycle W = pluecker_cycle({{{1, 0, 0, 0}, {0, 1, 1, 1}}, {{0, 0, 0, 1}, {1, 1, 1, 0}}});
    const std::vector<std::string> minors{"01", "02", "03", "12", "13", "23"};
    std::vector<std::vector<std::string>> printed{{"a+b", "a+c", "a+d", "", "", ""}, {"", "", "a+d", "", "b+d", "c+d"}};
    for (size_t k = 0; k < 2; ++k) {
      std::vector<std::string> e, g;
      bool ok = true;
      for (size_t m = 0; m < 6; ++m) {
        bool present = !W.points[k].coordinates[m].is_zero();
        e.push_back(printed[k][m].empty() ? "0" : "t^{" + printed[k][m] + "}");
        g.push_back(present ? "t^{" + PA.form_string(to_qvec(PA.weights[m])) + "}" : "0");
        if (present != !printed[k][m].empty()) ok = false;
        if (present && to_qvec(PA.weights[m]) != sl_form(printed[k][m])) ok = false;
      }
      std::string id = "pluecker.vector" + std::to_string(k + 1);
      S.add(id, ploc, "[" + join(e, " : ") + "]", "[" + join(g, " : ") + "] (d = -a-b-c)", ok);
    }
  });
  const std::string sloc = "quartic threefold, Chow stability under the diagonal SL torus";
  S.run("pluecker.L3L4", sloc, [&] {
    TableSpec T{pluecker_action(sl4_torus()), "abc", 0,
                pluecker_cycle({{{1, 0, 0, 0}, {0, 0, 0, 1}}, {{0, 1, 0, 0}, {0, 0, 1, 0}}})};
    verdict_fixture(S, "pluecker.L3L4", sloc + ", L3 + L4", T, Verdict::Polystable);
  });
  S.run("pluecker.C0C3", sloc, [&] {
    TableSpec T{pluecker_action(sl4_torus()), "abc", 0,
                pluecker_cycle({{{1, 0, 0, 0}, {0, 1, 1, 1}}, {{0, 0, 0, 1}, {1, 1, 1, 0}}})};
    verdict_fixture(S, "pluecker.C0C3", sloc + ", C0' + C3'", T, Verdict::Semistable,
                    "printed: stable; the 1PS (a,b,c,d) = (-1,-1,-1,3) has total weight 0 and a limit outside the "
                    "orbit, the sign argument treats the two Pluecker points separately");
  });
}

void suite_v6(Suite& S) {
  potential_fixture(S, "potential", "quadric and cubic complete intersection, potential", "V6",
                    "(x + 1)^2*(y + z + 1)^3/(x*y*z)", 3);
}

const IMat kV8Chart{{0, -1, -1, 2}, {-1, 0, -1, 2}, {1, 0, 0, -1}};

void suite_v8(Suite& S) {
  potential_fixture(S, "potential.cube", "three quadrics, product of lines degeneration", "V8-cube",
                    "(x+1)^2*(y+1)^2*(z+1)^2/(x*y*z)", 3);
  const std::string alt =
      "x*z^2 + 3*y*z^2 + 3*x^-1*y^2*z^2 + x^-2*y^3*z^2 + 2*x*z + 4*y*z + 2*x^-1*y^2*z + x + y + x*y^-1*z + 3*z"
      " + 3*x^-1*y*z + x^-2*y^2*z + 4*x*y^-1 + 4*x^-1*y + 3*x*y^-1*z^-1 + 3*z^-1 + 2*x*y^-2*z^-1 + 4*y^-1*z^-1"
      " + 2*x^-1*z^-1 + 3*x*y^-2*z^-2 + 3*y^-1*z^-2 + x*y^-3*z^-3 + y^-2*z^-3";
  potential_fixture(S, "potential.alt", "three quadrics, second degeneration", "V8-alt", alt, 3);
  facets_fixture(
      S, "alt.facets", "three quadrics, second degeneration, facet sums", "V8-alt",
      {{"f0", "x*z^2 + x^-2*y^3*z^2 + x*y^-1*z + x^-2*y^2*z + 3*z + 3*x^-1*y*z + 3*y*z^2 + 3*x^-1*y^2*z^2", "", {}},
       {"f1", "x + x*z^2 + x*y^-3*z^-3 + x*y^-1*z + 2*x*z + 4*x*y^-1 + 2*x*y^-2*z^-1 + 3*x*y^-1*z^-1 + 3*x*y^-2*z^-2", "", {}},
       {"f2", "x + y + x*z^2 + x^-2*y^3*z^2 + 2*x^-1*y^2*z + 4*y*z + 2*x*z + 3*x^-1*y^2*z^2 + 3*y*z^2", "", {}},
       {"f3", "x + y + x*y^-3*z^-3 + y^-2*z^-3 + 3*z^-1 + 3*y^-1*z^-2 + 3*x*y^-1*z^-1 + 3*x*y^-2*z^-2", "", {}},
       {"f4", "x*y^-3*z^-3 + y^-2*z^-3 + x*y^-1*z + x^-2*y^2*z + 2*x*y^-2*z^-1 + 4*y^-1*z^-1 + 2*x^-1*z^-1 + 3*z + 3*x^-1*y*z", "", {}},
       {"f5", "y + x^-2*y^3*z^2 + y^-2*z^-3 + x^-2*y^2*z + 2*x^-1*y^2*z + 4*x^-1*y + 2*x^-1*z^-1 + 3*z^-1 + 3*y^-1*z^-2", "", {}}});

  const std::string floc = "three quadrics, second degeneration, boundary forms on the blown-up P3";
  S.run("alt.forms", floc, [&] {
    LaurentPoly f = builtin_potential("V8-alt").potential;
    auto facets = faces(f.newton_polytope(), 2);
    using F = std::vector<std::pair<QVec, int>>;
    std::vector<std::tuple<std::string, std::string, F>> forms{
        {"H0", "z1(z2+z3)(z1+z2+z3)^2", F{{{0, 1, 0, 0}, 1}, {{0, 0, 1, 1}, 1}, {{0, 1, 1, 1}, 2}}},
        {"H1", "z0(z2+z3)(z0+z2+z3)^2", F{{{1, 0, 0, 0}, 1}, {{0, 0, 1, 1}, 1}, {{1, 0, 1, 1}, 2}}},
        {"H2", "z3(z0+z1)(z3+z0+z1)^2", F{{{0, 0, 0, 1}, 1}, {{1, 1, 0, 0}, 1}, {{1, 1, 0, 1}, 2}}},
        {"H3", "z2(z0+z1)(z2+z0+z1)^2", F{{{0, 0, 1, 0}, 1}, {{1, 1, 0, 0}, 1}, {{1, 1, 1, 0}, 2}}},
        {"EL1", "(z0+z1)^3(z2+z3)", F{{{1, 1, 0, 0}, 3}, {{0, 0, 1, 1}, 1}}},
        {"EL2", "(z2+z3)^3(z0+z1)", F{{{0, 0, 1, 1}, 3}, {{1, 1, 0, 0}, 1}}}};
    std::set<IVec> used;
    for (const auto& [name, text, fac] : forms) {
      LaurentPoly want = strip_monomial(product_form(fac));
      const FaceDescriptor* hit = nullptr;
      for (const auto& Fc : facets)
        if (strip_monomial(chart_pencil(face_restriction(f, Fc), kV8Chart).member) == want) hit = &Fc;
      if (hit) used.insert(hit->normal);
      S.add("alt.forms." + name, floc, text,
            hit ? "facet " + to_string(hit->normal) + " in the chart" : "no facet sum maps to this form", hit != nullptr);
    }
    S.add("alt.forms.distinct", floc, "6 distinct facets", std::to_string(used.size()) + " matched", used.size() == 6);
  });
  S.run("periods", "three quadrics, classical periods of the two degenerations", [&] {
    auto m = period_match(builtin_potential("V8-cube", false).potential, builtin_potential("V8-alt", false).potential, 8);
    S.add("periods", "three quadrics, classical periods of the two degenerations",
          "equal through order 8 after removing constant terms",
          m.match ? "equal through order 8 (constants " + to_string(m.shift_f) + ", " + to_string(m.shift_g) + ")"
                  : "first mismatch at order " + std::to_string(m.first_mismatch.value_or(0)),
          m.match);
  });
}

const std::vector<FacetFix>& d22_facets() {
  static const std::vector<FacetFix> fs{
      {"f0", "x^3*y^-2*z^-2 + x^2*y^-1*z^-2 + x^2*y^-2*z^-1 + z^-1 + y^-1 + x^-1 + 2*x*y^-1*z^-1", "",
       {"x+y", "x+z", "x^2+y*z"}, "x^-1*y^-2*z^-2"},
      {"f1", "x + z + x^3*y^-2*z^-2 + x^2*y^-2*z^-1 + 2*x^2*y^-1*z^-1 + 2*x*y^-1", "", {"x+z", "x+y*z", "x+y*z"},
       "y^-2*z^-2"},
      {"f2", "x + y + x^3*y^-2*z^-2 + x^2*y^-1*z^-2 + 2*x^2*y^-1*z^-1 + 2*x*z^-1", "", {"x+y", "x+y*z", "x+y*z"},
       "y^-2*z^-2"},
      {"f3", "x^-2*y^2*z + x^-3*y^2*z^2 + z^-1 + x^-1 + 2*x^-1*y + 2*x^-2*y*z", "", {"x+z", "x+y*z", "x+y*z"},
       "x^-3*z^-1"},
      {"f4", "x + y + z + x^-2*y^2*z + x^-2*y*z^2 + x^-3*y^2*z^2 + 2*x^-1*y*z", "", {"x+y", "x+z", "x^2+y*z"},
       "x^-3"},
      {"f5", "z + x^-2*y*z^2 + x^2*y^-2*z^-1 + y^-1 + 2*x*y^-1 + 2*x^-1*z", "", {"x+y*z", "x+y*z", "x^2+y*z"},
       "x^-2*y^-2*z^-1"},
      {"f6", "x^-2*y*z^2 + x^-3*y^2*z^2 + y^-1 + x^-1 + 2*x^-1*z + 2*x^-2*y*z", "", {"x+y", "x+y*z", "x+y*z"},
       "x^-3*y^-1"},
      {"f7", "y + x^-2*y^2*z + x^2*y^-1*z^-2 + z^-1 + 2*x*z^-1 + 2*x^-1*y", "", {"x+y*z", "x+y*z", "x^2+y*z"},
       "x^-2*y^-1*z^-2"}};
  return fs;
}

const FacetFix kC222_f0{"f0", "x^3*y^-2*z^-2 + x^2*y^-1*z^-2 + x^2*y^-2*z^-1 + z^-1 + y^-1 + x^-1 + 3*x*y^-1*z^-1", "",
                        {"x^2+x*y+y*z", "x^2+x*z+y*z"}, "x^-1*y^-2*z^-2"};
const FacetFix kC222_f4{"f4", "x + y + z + x^-2*y^2*z + x^-2*y*z^2 + x^-3*y^2*z^2 + 3*x^-1*y*z", "",
                        {"x^2+x*y+y*z", "x^2+x*z+y*z"}, "x^-3"};

const std::string kD22 =
    "x + y + z + 2*x^-1*y*z + x^-2*y^2*z + x^-2*y*z^2 + x^-3*y^2*z^2 + 2*x^2*y^-1*z^-1 + 2*x*z^-1 + 2*x*y^-1"
    " + 2*x^-1*y + 2*x^-1*z + 2*x^-2*y*z + x^3*y^-2*z^-2 + x^2*y^-1*z^-2 + x^2*y^-2*z^-1 + 2*x*y^-1*z^-1"
    " + z^-1 + y^-1 + x^-1";

void suite_d22(Suite& S) {
  potential_fixture(S, "potential", "(2,2) divisor, potential", "D22", kD22, 3);
  facets_fixture(S, "facets", "(2,2) divisor, facet sums and factorizations", "D22", d22_facets());
}

void suite_c222(Suite& S) {
  std::string f = kD22;
  f.replace(f.find("2*x^-1*y*z"), 10, "3*x^-1*y*z");
  f.replace(f.find("2*x*y^-1*z^-1"), 13, "3*x*y^-1*z^-1");
  potential_fixture(S, "potential", "(2,2,2) double cover, potential", "C222", f, 3);
  std::vector<FacetFix> fs{kC222_f0};
  for (const auto& d : d22_facets())
    if (d.label != "f0" && d.label != "f4") fs.push_back(d);
  fs.push_back(kC222_f4);
  facets_fixture(S, "facets", "(2,2,2) double cover, facet sums", "C222", fs);
}

void suite_v12(Suite& S) {
  std::string f = kD22;
  f.replace(f.find("2*x*y^-1*z^-1"), 13, "3*x*y^-1*z^-1");
  potential_fixture(S, "potential", "V12, potential", "V12", f, 3,
                    "printed term '2 x{-2} y z' read as 2 x^{-2} y z");
  std::vector<FacetFix> fs{kC222_f0};
  for (const auto& d : d22_facets())
    if (d.label != "f0") fs.push_back(d);
  facets_fixture(S, "facets", "V12, facet sums", "V12", fs);
}

void suite_v10(Suite& S) {
  potential_fixture(S, "potential", "V10, potential", "V10",
                    "x*z^2 + 2*x*z + y*z + x*y^-1*z^2 + x + y + 3*x*y^-1*z + 3*z + 3*x*y^-1 + 2*x^-1*y + y^-1*z"
                    " + x*y^-1*z^-1 + 3*z^-1 + 2*x^-1*y*z^-1 + 3*y^-1 + 2*x^-1 + 3*y^-1*z^-1 + 4*x^-1*z^-1"
                    " + x^-2*y*z^-1 + y^-1*z^-2 + 2*x^-1*z^-2 + x^-2*y*z^-2",
                    3);
  facets_fixture(
      S, "facets", "V10, facet sums and factorizations", "V10",
      {{"f0", "x*z^2 + 2*x*z + x*y^-1*z^2 + y^-1*z + x^-2*y*z^-1 + 2*x^-1 + 3*z + 2*x^-1*y",
        "x*z^2 + y*z + x*y^-1*z^2 + y^-1*z + x^-2*y*z^-1 + 2*x^-1 + 3*z + 2*x^-1*y", {}},
       {"f1", "x + y + x*z^2 + y*z + 2*x*z", "", {"z+1", "x*z+x+y"}, "1"},
       {"f2", "x + x*z^2 + x*y^-1*z^-1 + x*y^-1*z^2 + 3*x*y^-1 + 3*x*y^-1*z + 2*x*z", "", {"z+1", "z+1", "y*z+z+1"},
        "x*y^-1*z^-1"},
       {"f3", "y^-1*z + y^-1*z^-2 + x^-2*y*z^-1 + x^-2*y*z^-2 + 3*y^-1 + y^-1*z + 2*x^-1 + 4*x^-1*z^-1 + 2*x^-1*z^-2",
        "y^-1*z + y^-1*z^-2 + x^-2*y*z^-1 + x^-2*y*z^-2 + 3*y^-1 + 3*y^-1*z^-1 + 2*x^-1 + 4*x^-1*z^-1 + 2*x^-1*z^-2", {}},
       {"f4", "x + y + x*y^-1*z^-1 + y^-1*z^-2 + x^-2*y*z^-2 + 2*x^-1*z^-2 + 3*z^-1 + 2*x^-1*y*z^-1", "",
        {"x+y", "x*z+1", "x*y*z+x+y"}, "x^-2*y^-1*z^-2"},
       {"f5", "x*y^-1*z^-1 + x*y^-1*z^2 + y^-1*z + y^-1*z^-2 + 3*y^-1*z^-1 + 3*y^-1 + 3*x*y^-1 + 3*x*y^-1*z", "",
        {"z+1", "z+1", "z+1", "x*z+1"}, "y^-1*z^-2"},
       {"f6", "y + y*z + x^-2*y*z^-1 + x^-2*y*z^-2 + 2*x^-1*y + 2*x^-1*y*z^-1", "", {"z+1", "x*z+1", "x*z+1"},
        "x^-2*y*z^-2"}});
}

void suite_d1111(Suite& S) {
  potential_fixture(S, "potential", "(1,1,1,1) divisor, potential", "D1111",
                    "x + y + z + x^-1*y*z + x*z^-1 + x*y^-1 + x^-1*y + x^-1*z + x*y^-1*z^-1 + z^-1 + y^-1 + x^-1", 3);
}

void suite_periods(Suite& S) {
  const std::string loc = "P2 mirror, classical period at a0 = 0";
  S.run("P2", loc, [&] {
    PowerSeries p = classical_period(builtin_potential("P2", false).potential, 9);
    std::vector<std::string> got;
    for (size_t k = 0; k <= 9; ++k) got.push_back(to_string(p[k]));
    std::string want = "1, 0, 0, 6, 0, 0, 90, 0, 0, 1680";
    S.add("P2", loc, want, join(got, ", "), join(got, ", ") == want);
  });
  S.run("P2.c3", "P2 mirror, classical period with parameter", [&] {
    PowerSeries p = classical_period(builtin_potential("P2").potential, 3);
    S.add("P2.c3", "P2 mirror, classical period with parameter", "6*e^{-a0}", to_string(p[3]),
          p[3] == parse_scalar("6*e^{-a0}"));
  });
  for (const auto& id : potential_ids()) {
    S.run("newton." + id, "catalog potentials, Newton polytope check", [&] {
      bool ok = newton_check(builtin_potential(id));
      S.add("newton." + id, "catalog potentials, Newton polytope check", "Newton polytope = delta",
            ok ? "Newton polytope = delta" : "mismatch", ok);
    });
  }
}

void suite_adiabatic(Suite& S) {
  const std::string qloc = "quartic threefold, adiabatic K-instability";
  S.run("quartic", qloc, [&] {
    FibrationSummary f;
    f.fibers = {FiberDatum::snc(4, "F")};
    f.log_cy = true;
    AdiabaticReport r = verdict(f);
    S.add("quartic", qloc, "adiabatically_unstable, max a_P = 3/4 > 1/2",
          to_string(r.verdict) + ", max a_P = " + to_string(r.max_a) + " vs " + to_string(r.threshold),
          r.verdict == AdiabaticVerdict::Unstable && r.max_a == Rational(3, 4) && r.threshold == Rational(1, 2));
  });
  const std::string cloc = "cubic surface mirror, adiabatic K-stability";
  S.run("cubic.special", cloc, [&] {
    AdiabaticReport r =
        rule_verdict({FiberDatum::kodaira("I1"), FiberDatum::kodaira("I3"), FiberDatum::kodaira("IV*")});
    S.add("cubic.special", cloc + ", fibres I1, I3, IV*", "adiabatically_unstable",
          to_string(r.verdict) + " (" + r.rule + ")", r.verdict == AdiabaticVerdict::Unstable);
  });
  S.run("cubic.generic", cloc, [&] {
    std::vector<FiberDatum> fs(12, FiberDatum::kodaira("I1"));
    AdiabaticReport r = rule_verdict(fs);
    S.add("cubic.generic", cloc + ", generic parameters (only I_N fibres)", "stable_for_large_parameter",
          to_string(r.verdict) + " (" + r.rule + ")", r.verdict == AdiabaticVerdict::StableForLargeParameter);
  });
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"polytope", suite_polytope}, {"P2", suite_p2},     {"S6", suite_s6},         {"S3", suite_s3},
      {"P4b", suite_p4b},           {"S4", suite_s4},     {"P4a", suite_p4a},       {"P8a", suite_p8a},
      {"P4c", suite_p4c},           {"P5a", suite_p5a},   {"P5b", suite_p5b},       {"P6b", suite_p6b},
      {"P7a", suite_p7a},           {"V4", suite_v4},     {"V6", suite_v6},         {"V8", suite_v8},
      {"D22", suite_d22},           {"C222", suite_c222}, {"V12", suite_v12},       {"V10", suite_v10},
      {"D1111", suite_d1111},       {"periods", suite_periods}, {"adiabatic", suite_adiabatic}};
  return s;
}

}  // namespace

std::vector<std::string> suite_tags() {
  std::vector<std::string> t;
  for (const auto& [name, fn] : suites()) t.push_back(name);
  return t;
}

SuiteReport verify_paper_suite(const std::optional<std::string>& filter) {
  if (filter) {
    auto tags = suite_tags();
    if (std::find(tags.begin(), tags.end(), *filter) == tags.end())
      throw std::invalid_argument("unknown case '" + *filter + "'; known: " + join(tags, ", "));
  }
  SuiteReport r;
  for (const auto& [name, fn] : suites()) {
    if (filter && *filter != name) continue;
    Suite s{name, &r.fixtures};
    fn(s);
  }
  return r;
}

std::string render_text(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& f : r.fixtures) {
    out << (f.pass ? "PASS " : "FAIL ") << f.id << "  [" << f.location << "]\n";
    if (!f.pass || !f.erratum.empty()) {
      out << "    expected: " << f.expected << "\n";
      out << "    actual:   " << f.actual << "\n";
    }
    if (!f.erratum.empty()) out << "    erratum:  " << f.erratum << "\n";
  }
  size_t errata = size_t(std::count_if(r.fixtures.begin(), r.fixtures.end(),
                                       [](const FixtureResult& f) { return !f.erratum.empty(); }));
  out << r.fixtures.size() << " fixtures, " << r.failures() << " failed, " << errata << " pinned errata\n";
  return out.str();
}

std::string render_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["fixtures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.fixtures) {
    nlohmann::ordered_json o;
    o["tag"] = f.tag;
    o["id"] = f.id;
    o["location"] = f.location;
    o["pass"] = f.pass;
    o["expected"] = f.expected;
    o["actual"] = f.actual;
    if (!f.erratum.empty()) o["erratum"] = f.erratum;
    j["fixtures"].push_back(o);
  }
  j["total"] = r.fixtures.size();
  j["failed"] = r.failures();
  return j.dump(2) + "\n";
}

}  // namespace lgt
