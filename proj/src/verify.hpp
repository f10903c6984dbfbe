#pragma once

#include <string>
#include <vector>

namespace noncross {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // compared values or the first mismatch
};

// Runs one of the cross-validation suites: "counts", "bijection",
// "transform", "termcounts" or "all". max_n == 0 keeps each check's default
// sweep range; otherwise ranges are capped at max_n. Checks run and report
// in a fixed order.
std::vector<CheckResult> run_suite(const std::string& suite, unsigned max_n = 0);

// One line per check: "PASS <name>: <detail>".
std::string render_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace noncross
