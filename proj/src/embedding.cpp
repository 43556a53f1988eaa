#include "lgt/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lgt {

namespace {

std::string side_string(const std::vector<size_t>& s) {
  std::string out;
  for (size_t i = 0; i < s.size();) {
    size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(s[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<size_t> parse_side(const std::string& text) {
  std::vector<size_t> r;
  size_t i = 0;
  auto digits = [&](size_t& pos) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("bad binomial: " + text);
    return std::stoul(text.substr(start, pos - start));
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '*') { ++i; continue; }
    if (c != 'x') throw std::invalid_argument("bad binomial: " + text);
    ++i;
    size_t idx = digits(i);
    size_t power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      power = digits(i);
    }
    r.insert(r.end(), power, idx);
  }
  std::sort(r.begin(), r.end());
  return r;
}

struct DisjointSets {
  std::vector<size_t> parent;
  explicit DisjointSets(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  size_t find(size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

bool share_index(const std::vector<size_t>& a, const std::vector<size_t>& b) {
  for (size_t i : a)
    if (std::find(b.begin(), b.end(), i) != b.end()) return true;
  return false;
}

}  // namespace

std::string to_string(const Binomial& b) { return side_string(b.lhs) + " = " + side_string(b.rhs); }

Binomial parse_binomial(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) {
    // "a - b" form
    eq = text.find('-');
    if (eq == std::string::npos) throw std::invalid_argument("bad binomial: " + text);
  }
  Binomial b{parse_side(text.substr(0, eq)), parse_side(text.substr(eq + 1))};
  if (b.lhs.size() != b.rhs.size()) throw std::invalid_argument("inhomogeneous binomial: " + text);
  return b;
}

size_t AnticanonicalEmbedding::index_of(const IVec& c) const {
  for (size_t i = 0; i < coordinates.size(); ++i)
    if (coordinates[i] == c) return i;
  throw std::invalid_argument(to_string(c) + " is not a lattice point of " + delta.name());
}

bool AnticanonicalEmbedding::has_relation(const Binomial& b) const {
  Binomial s{b.rhs, b.lhs};
  return std::find(relations.begin(), relations.end(), b) != relations.end() ||
         std::find(relations.begin(), relations.end(), s) != relations.end();
}

AnticanonicalEmbedding anticanonical_embedding(const LatticePolytope& delta, const std::vector<IVec>& labels) {
  if (!is_reflexive(delta)) throw std::invalid_argument("anticanonical_embedding: " + delta.name() + " is not reflexive");
  AnticanonicalEmbedding emb;
  emb.delta = delta;
  const size_t n = delta.rank();
  IVec origin(n, 0);
  std::vector<IVec> pts = lattice_points(delta);
  emb.coordinates.push_back(origin);
  if (!labels.empty()) {
    std::set<IVec> want(pts.begin(), pts.end()), got(labels.begin(), labels.end());
    want.erase(origin);
    if (want != got || labels.size() != got.size())
      throw std::invalid_argument("coordinate labels do not match the lattice points of " + delta.name());
    emb.coordinates.insert(emb.coordinates.end(), labels.begin(), labels.end());
  } else if (n == 2) {
    for (const auto& e : faces(delta, 1))
      emb.coordinates.insert(emb.coordinates.end(), e.points.begin(), e.points.end() - 1);
  } else {
    for (const auto& p : pts)
      if (p != origin) emb.coordinates.push_back(p);
  }

  const size_t N = emb.coordinates.size();
  // degree 2: every pair of monomials in a fibre
  std::map<IVec, std::vector<std::vector<size_t>>> fib2;
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i; j < N; ++j) fib2[emb.coordinates[i] + emb.coordinates[j]].push_back({i, j});
  for (const auto& [sum, ms] : fib2)
    for (size_t a = 0; a < ms.size(); ++a)
      for (size_t b = a + 1; b < ms.size(); ++b) emb.relations.push_back({ms[a], ms[b]});

  // degree 3: monomials sharing a variable are already related through a quadric
  std::map<IVec, std::vector<std::vector<size_t>>> fib3;
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i; j < N; ++j)
      for (size_t k = j; k < N; ++k)
        fib3[emb.coordinates[i] + emb.coordinates[j] + emb.coordinates[k]].push_back({i, j, k});
  for (const auto& [sum, ms] : fib3) {
    if (ms.size() < 2) continue;
    DisjointSets ds(ms.size());
    for (size_t a = 0; a < ms.size(); ++a)
      for (size_t b = a + 1; b < ms.size(); ++b)
        if (share_index(ms[a], ms[b])) ds.unite(a, b);
    std::vector<size_t> reps;
    for (size_t a = 0; a < ms.size(); ++a)
      if (ds.find(a) == a) reps.push_back(a);
    std::sort(reps.begin(), reps.end());
    for (size_t r = 1; r < reps.size(); ++r) emb.relations.push_back({ms[reps[0]], ms[reps[r]]});
  }
  return emb;
}

std::vector<BoundaryComponent> boundary_components(const AnticanonicalEmbedding& emb) {
  std::vector<BoundaryComponent> out;
  int d = emb.delta.rank() - 1;
  for (const auto& F : faces(emb.delta, d)) {
    BoundaryComponent C;
    C.face = F;
    for (const auto& p : F.points) C.coordinates.push_back(emb.index_of(p));
    std::set<size_t> support(C.coordinates.begin(), C.coordinates.end());
    for (const auto& r : emb.relations) {
      bool inside = true;
      for (size_t i : r.lhs) inside = inside && support.count(i);
      for (size_t i : r.rhs) inside = inside && support.count(i);
      if (inside) C.relations.push_back(r);
    }
    out.push_back(std::move(C));
  }
  return out;
}

std::vector<std::pair<long, long>> parametrization_exponents(const BoundaryComponent& C) {
  std::vector<std::pair<long, long>> r;
  long k = C.degree();
  for (long j = 0; j <= k; ++j) r.emplace_back(k - j, j);
  return r;
}

Pencil pencil_from_potential(const PotentialEntry& entry) {
  Pencil p;
  p.embedding = anticanonical_embedding(entry.delta, entry.labels);
  p.potential = entry.potential;
  p.parameter_names = entry.parameter_names;
  p.member.assign(p.embedding.coordinates.size(), ParamScalar());
  for (const auto& [e, c] : entry.potential.terms()) {
    size_t i;
    try {
      i = p.embedding.index_of(e);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("pencil: coefficient support " + to_string(e) + " exceeds the lattice points of delta");
    }
    if (i == 0) p.constant = c;
    else p.member[i] = c;
  }
  return p;
}

std::string to_string(const Pencil& p) {
  std::string out = "|";
  bool first = true;
  for (size_t i = 1; i < p.member.size(); ++i) {
    const auto& c = p.member[i];
    if (c.is_zero()) continue;
    if (!first) out += " + ";
    first = false;
    if (c == ParamScalar(1)) {
    } else if (c.terms().size() == 1) {
      out += to_string(c) + "*";
    } else {
      out += "(" + to_string(c) + ")*";
    }
    out += "x" + std::to_string(i);
  }
  return out + ", x0|";
}

ChartPencil chart_pencil(const LaurentPoly& f, const IMat& chart) {
  if (chart.size() != f.nvars()) throw std::invalid_argument("chart_pencil: one chart row per torus variable");
  const size_t nz = chart.front().size();
  IMat M(nz, IVec(f.nvars(), 0));
  for (size_t i = 0; i < chart.size(); ++i) {
    if (chart[i].size() != nz) throw std::invalid_argument("chart_pencil: ragged chart");
    for (size_t j = 0; j < nz; ++j) M[j][i] = chart[i][j];
  }
  LaurentPoly F = f.change_variables(M);
  IVec D(nz, 0);
  for (const auto& [e, c] : F.terms())
    for (size_t j = 0; j < nz; ++j) D[j] = std::max(D[j], -e[j]);
  return {F * LaurentPoly::monomial(D), D};
}

IMat standard_chart(size_t n) {
  IMat A(n, IVec(n + 1, 0));
  for (size_t i = 0; i < n; ++i) {
    A[i][0] = -1;
    A[i][i + 1] = 1;
  }
  return A;
}

}  // namespace lgt
