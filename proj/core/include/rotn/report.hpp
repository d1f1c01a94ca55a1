#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace rotn {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// An ordered list of named pass/fail checks.
struct CheckReport {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void merge(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
  }
  /// First failing check, or nullptr.
  const Check* first_failure() const {
    auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
    return it == checks.end() ? nullptr : &*it;
  }
};

}  // namespace rotn
