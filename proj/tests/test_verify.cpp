#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "lgt/verify.hpp"

using namespace lgt;

TEST_CASE("suite filters") {
  for (const std::string tag : {"P2", "S6"}) {
    CAPTURE(tag);
    SuiteReport r = verify_paper_suite(tag);
    CHECK(!r.fixtures.empty());
    CHECK(r.ok());
    for (const auto& f : r.fixtures) CHECK(f.tag == tag);
  }
  CHECK_THROWS_AS(verify_paper_suite(std::string("nonexistent")), std::invalid_argument);
}

TEST_CASE("full suite is deterministic and cites locations") {
  SuiteReport a = verify_paper_suite();
  SuiteReport b = verify_paper_suite();
  CHECK(render_text(a) == render_text(b));
  CHECK(render_json(a) == render_json(b));
  CHECK(a.ok());
  for (const auto& f : a.fixtures) {
    CAPTURE(f.id);
    CHECK(!f.location.empty());
    CHECK(f.location.find("\xc2\xa7") == std::string::npos);
  }
}
