#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhodge/classical.hpp"
#include "qhodge/verify.hpp"

using namespace qhodge;

namespace {

void require_passed(const SuiteReport& r) {
  for (const auto& c : r.checks) {
    INFO(r.suite << " / " << c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("every verification suite passes") {
  for (const auto& name : suite_names()) {
    SuiteReport r = run_suite(name);
    CHECK(r.suite == name);
    CHECK_FALSE(r.checks.empty());
    require_passed(r);
  }
}

TEST_CASE("classical limit") { require_passed(classical_suite()); }

TEST_CASE("parallel runs keep the requested order") {
  std::vector<std::string> names{"sphere", "hopf", "classical"};
  auto reports = run_suites(names, true);
  REQUIRE(reports.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(reports[i].suite == names[i]);
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("reports serialise") {
  nlohmann::json j = run_suite("sphere");
  CHECK(j["suite"] == "sphere");
  CHECK(j["checks"].is_array());
  CHECK(j["passed"].is_boolean());
}

TEST_CASE("failing checks capture exceptions") {
  Check c = run_check("throws", [](std::string&) -> bool { throw std::runtime_error("boom"); });
  CHECK_FALSE(c.passed);
  CHECK(c.detail.find("boom") != std::string::npos);
}
