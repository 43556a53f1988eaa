#include "lgt/adiabatic.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

#include "json.hpp"

namespace lgt {

FiberDatum FiberDatum::snc(long m, std::string label) {
  if (m < 1) throw std::invalid_argument("snc multiplicity must be positive");
  FiberDatum f;
  f.kind = Kind::Snc;
  f.snc_multiplicity = m;
  f.label = std::move(label);
  return f;
}

FiberDatum FiberDatum::kodaira(const std::string& tag, std::string label) {
  FiberDatum f;
  f.kind = Kind::Kodaira;
  f.kodaira_type = normalize_kodaira(tag);
  f.label = std::move(label);
  return f;
}

FiberDatum FiberDatum::explicit_lct(const Rational& c, std::string label) {
  if (c <= 0 || c > 1) throw std::invalid_argument("explicit lct must lie in (0, 1]");
  FiberDatum f;
  f.kind = Kind::Explicit;
  f.lct = c;
  f.label = std::move(label);
  return f;
}

std::string normalize_kodaira(const std::string& tag) {
  std::string t;
  for (char c : tag)
    if (c != '_' && c != '^' && c != ' ' && c != '{' && c != '}') t += char(std::toupper(static_cast<unsigned char>(c)));
  static const std::regex form(R"(([0-9]*)(I[0-9]+\*?|II\*?|III\*?|IV\*?))");
  std::smatch m;
  if (!std::regex_match(t, m, form)) throw std::invalid_argument("unknown Kodaira type: " + tag);
  std::string mult = m[1].str(), body = m[2].str();
  if (!mult.empty() && std::stol(mult) < 1) throw std::invalid_argument("bad fiber multiplicity: " + tag);
  if (mult == "1") mult.clear();
  // only I_N fibres can be multiple
  if (!mult.empty() && (body[1] < '0' || body[1] > '9' || body.back() == '*'))
    throw std::invalid_argument("only I_N fibers can be multiple: " + tag);
  return mult + body;
}

void FibrationSummary::validate() const {
  if (deg_MB < 0) throw std::invalid_argument("deg_MB must be nonnegative");
  if (log_cy && deg_MB != 1) throw std::invalid_argument("deg_MB is forced to 1 for a log Calabi-Yau fibration");
}

Rational fiber_lct(const FiberDatum& f) {
  switch (f.kind) {
    case FiberDatum::Kind::Snc: return Rational(1, f.snc_multiplicity);
    case FiberDatum::Kind::Explicit: return f.lct;
    default:
      throw std::invalid_argument("fiber_lct: no lct is available for Kodaira type " + f.kodaira_type +
                                  "; use rule_verdict");
  }
}

std::vector<Rational> discriminant(const FibrationSummary& f) {
  std::vector<Rational> a;
  for (const auto& fb : f.fibers) a.push_back(1 - fiber_lct(fb));
  return a;
}

std::string to_string(AdiabaticVerdict v) {
  switch (v) {
    case AdiabaticVerdict::Unstable: return "adiabatically_unstable";
    case AdiabaticVerdict::StableForLargeParameter: return "stable_for_large_adiabatic_parameter";
    default: return "not_decided_by_criterion";
  }
}

namespace {

bool is_multiple(const std::string& t) { return std::isdigit(static_cast<unsigned char>(t[0])); }
bool is_i_n(const std::string& t) { return t.size() >= 2 && t[0] == 'I' && std::isdigit(static_cast<unsigned char>(t[1])) && t.back() != '*'; }

}  // namespace

AdiabaticReport rule_verdict(const std::vector<FiberDatum>& fibers) {
  AdiabaticReport r;
  std::vector<std::string> types;
  for (const auto& f : fibers) {
    if (f.kind != FiberDatum::Kind::Kodaira) throw std::invalid_argument("rule_verdict: fibers must carry Kodaira types");
    types.push_back(f.kodaira_type);
  }
  if (std::any_of(types.begin(), types.end(), is_multiple)) {
    r.rule = "multiple-fiber";
    return r;
  }
  if (std::any_of(types.begin(), types.end(), [](const std::string& t) { return t == "II*" || t == "III*" || t == "IV*"; })) {
    r.verdict = AdiabaticVerdict::Unstable;
    r.rule = "fiber-type-II*-III*-IV*";
  } else if (std::all_of(types.begin(), types.end(), is_i_n)) {
    r.verdict = AdiabaticVerdict::StableForLargeParameter;
    r.rule = "fiber-type-I_N";
  } else {
    r.rule = "fiber-type-other";
  }
  return r;
}

AdiabaticReport verdict(const FibrationSummary& f) {
  f.validate();
  std::vector<FiberDatum> kod;
  AdiabaticReport r;
  r.threshold = f.deg_MB / 2;
  r.max_a = 0;
  bool any_resolvable = false;
  for (const auto& fb : f.fibers) {
    if (fb.kind == FiberDatum::Kind::Kodaira) {
      kod.push_back(fb);
      continue;
    }
    any_resolvable = true;
    r.max_a = std::max<Rational>(r.max_a, 1 - fiber_lct(fb));
  }
  if (any_resolvable && r.max_a > r.threshold) {
    r.verdict = AdiabaticVerdict::Unstable;
    r.rule = "discriminant-threshold";
    return r;
  }
  if (!kod.empty() && !any_resolvable) {
    auto k = rule_verdict(kod);
    k.threshold = r.threshold;
    k.max_a = r.max_a;
    return k;
  }
  r.rule = "discriminant-threshold";
  return r;
}

FibrationSummary parse_fibration(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  auto rational = [](const nlohmann::json& v) -> Rational {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("expected an integer or a \"p/q\" string");
  };
  FibrationSummary s;
  if (!j.contains("fibers") || !j["fibers"].is_array()) throw std::invalid_argument("fibration JSON needs a fibers array");
  for (const auto& fj : j["fibers"]) {
    std::string label = fj.value("label", "");
    int n = int(fj.contains("snc_multiplicity")) + int(fj.contains("kodaira_type")) + int(fj.contains("lct"));
    if (n != 1) throw std::invalid_argument("each fiber needs exactly one of snc_multiplicity, kodaira_type, lct");
    if (fj.contains("snc_multiplicity")) s.fibers.push_back(FiberDatum::snc(fj["snc_multiplicity"].get<long>(), label));
    else if (fj.contains("kodaira_type")) s.fibers.push_back(FiberDatum::kodaira(fj["kodaira_type"].get<std::string>(), label));
    else s.fibers.push_back(FiberDatum::explicit_lct(rational(fj["lct"]), label));
  }
  s.log_cy = j.value("log_cy", false);
  if (j.contains("deg_MB")) {
    if (s.log_cy) throw std::invalid_argument("deg_MB cannot be overridden for a log Calabi-Yau fibration");
    s.deg_MB = rational(j["deg_MB"]);
  }
  s.validate();
  return s;
}

}  // namespace lgt
