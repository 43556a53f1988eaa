#ifndef LGT_VERIFY_HPP
#define LGT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

namespace lgt {

struct FixtureResult {
  std::string tag;       // case filter the fixture belongs to ("P2", "S6", ...)
  std::string id;        // stable identifier, unique within the suite
  std::string location;  // where the value is printed, e.g. "P2 mirror, Hilbert-Mumford table"
  std::string expected;
  std::string actual;
  bool pass = false;
  // Set when the printed value contradicts the printed data it derives from; the fixture
  // then pins the recomputed value and records the printed one here.
  std::string erratum;
};

struct SuiteReport {
  std::vector<FixtureResult> fixtures;
  size_t failures() const;
  bool ok() const { return failures() == 0; }
};

std::vector<std::string> suite_tags();

// Runs every fixture, or those of one tag; throws std::invalid_argument on an unknown tag.
SuiteReport verify_paper_suite(const std::optional<std::string>& filter = std::nullopt);

std::string render_text(const SuiteReport& r);
std::string render_json(const SuiteReport& r);

}  // namespace lgt

#endif
