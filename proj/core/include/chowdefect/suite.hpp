#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace chowdefect {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// A named batch of identity checks, reported as one table.
struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

}  // namespace chowdefect
