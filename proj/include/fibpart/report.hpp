#pragma once

// Pass/fail reports returned by every verification routine. Failures are data,
// not exceptions; callers decide what a failed check means.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace fibpart {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  bool vacuous = false;  // passed because the quantified set is empty
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  Check& add(std::string name, bool passed, std::string detail = {}, bool vacuous = false) {
    checks_.push_back(Check{std::move(name), passed, std::move(detail), vacuous});
    return checks_.back();
  }

  void append(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
  }

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace fibpart
