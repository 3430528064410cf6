#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qhodge {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

/// hopf, calculus, hodge, sphere, laplacian, classical.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name);
/// Results ordered as `names`, whatever the execution order.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, bool parallel = true);

/// The twelve acceptance criteria, numbered from 1.
inline constexpr int kCriterionCount = 12;
Check acceptance_criterion(int n);

/// Runs `body`, turning exceptions into a failed check.
Check run_check(const std::string& name, const std::function<bool(std::string&)>& body);

void to_json(nlohmann::json& j, const Check& c);
void to_json(nlohmann::json& j, const SuiteReport& r);

}  // namespace qhodge
