#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "lgt/adiabatic.hpp"

using namespace lgt;

TEST_CASE("log canonical thresholds") {
  CHECK(fiber_lct(FiberDatum::snc(4)) == Rational(1, 4));
  CHECK(fiber_lct(FiberDatum::snc(1)) == 1);
  CHECK(fiber_lct(FiberDatum::explicit_lct(Rational(2, 3))) == Rational(2, 3));
  // no lct table for Kodaira types; those route to rule_verdict
  for (const char* t : {"I1", "I7", "II", "III", "IV", "I0*", "I3*", "II*", "III*", "IV*"}) {
    CAPTURE(t);
    CHECK_THROWS_AS(fiber_lct(FiberDatum::kodaira(t)), std::invalid_argument);
  }
  CHECK(normalize_kodaira("I_3") == "I3");
  CHECK(normalize_kodaira("I0^*") == "I0*");
  CHECK_THROWS(normalize_kodaira("V*"));
}

TEST_CASE("discriminant") {
  FibrationSummary q{{FiberDatum::snc(4)}, 1, true};
  CHECK(discriminant(q) == std::vector<Rational>{Rational(3, 4)});
  FibrationSummary red{{FiberDatum::snc(1), FiberDatum::snc(1)}, 1, false};
  CHECK(discriminant(red) == std::vector<Rational>{0, 0});
  FibrationSummary ex{{FiberDatum::explicit_lct(Rational(1, 2))}, 1, false};
  CHECK(discriminant(ex) == std::vector<Rational>{Rational(1, 2)});
}

TEST_CASE("verdicts") {
  FibrationSummary q{{FiberDatum::snc(4)}, 1, true};
  AdiabaticReport r = verdict(q);
  CHECK(r.verdict == AdiabaticVerdict::Unstable);
  CHECK(r.max_a == Rational(3, 4));
  CHECK(r.threshold == Rational(1, 2));
  CHECK(rule_verdict({FiberDatum::kodaira("I1"), FiberDatum::kodaira("I3"), FiberDatum::kodaira("IV*")}).verdict ==
        AdiabaticVerdict::Unstable);
  CHECK(rule_verdict(std::vector<FiberDatum>(12, FiberDatum::kodaira("I1"))).verdict ==
        AdiabaticVerdict::StableForLargeParameter);
}

TEST_CASE("fibration JSON") {
  auto f = parse_fibration(R"({"fibers": [{"snc_multiplicity": 4}], "deg_MB": 1})");
  CHECK(f.fibers.size() == 1);
  CHECK(verdict(f).verdict == AdiabaticVerdict::Unstable);
  auto g = parse_fibration(R"({"fibers": [{"kodaira_type": "IV*"}, {"lct": "2/3"}]})");
  CHECK(g.fibers.size() == 2);
  CHECK_THROWS(parse_fibration(R"({"fibers": [{"colour": 3}]})"));
  CHECK_THROWS(parse_fibration("not json"));
}
