#ifndef LGT_ADIABATIC_HPP
#define LGT_ADIABATIC_HPP

#include <string>
#include <vector>

#include "lgt/rational.hpp"

namespace lgt {

struct FiberDatum {
  enum class Kind { Snc, Kodaira, Explicit };
  std::string label;
  Kind kind = Kind::Snc;
  long snc_multiplicity = 1;  // maximal multiplicity of an SNC fiber
  std::string kodaira_type;   // normalized tag: I3, I0*, IV*, 2I1 (multiple), ...
  Rational lct = 1;

  static FiberDatum snc(long m, std::string label = "");
  static FiberDatum kodaira(const std::string& tag, std::string label = "");
  static FiberDatum explicit_lct(const Rational& c, std::string label = "");
};

// Throws on tags outside Kodaira's list; accepts I_3, I3, IV*, I0^*, 2I_1.
std::string normalize_kodaira(const std::string& tag);

struct FibrationSummary {
  std::vector<FiberDatum> fibers;
  Rational deg_MB = 1;
  bool log_cy = false;  // deg(M+B) is forced to 1
  void validate() const;
};

Rational fiber_lct(const FiberDatum& f);
std::vector<Rational> discriminant(const FibrationSummary& f);

enum class AdiabaticVerdict { Unstable, NotDecided, StableForLargeParameter };
std::string to_string(AdiabaticVerdict v);

struct AdiabaticReport {
  AdiabaticVerdict verdict = AdiabaticVerdict::NotDecided;
  std::string rule;  // identifier of the criterion that decided
  Rational max_a;    // over lct-resolvable fibers
  Rational threshold;
};

// Elliptic surfaces: only the fiber types matter.
AdiabaticReport rule_verdict(const std::vector<FiberDatum>& fibers);
AdiabaticReport verdict(const FibrationSummary& f);

// {"fibers": [{"snc_multiplicity": 4} | {"kodaira_type": "IV*"} | {"lct": "2/3"}], "deg_MB": 1, "log_cy": true}
FibrationSummary parse_fibration(const std::string& json_text);

}  // namespace lgt

#endif
