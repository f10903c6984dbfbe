#include "doctest.h"
#include "verify.hpp"

using namespace noncross;

TEST_CASE("all suites pass on a reduced sweep") {
  auto results = run_suite("all", 5);
  CHECK(results.size() > 15);
  for (const auto& c : results) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
  std::string report = render_report(results);
  CHECK(report.find("PASS") == 0);
  CHECK(report.find("FAIL") == std::string::npos);
  CHECK(all_passed(results));
}

TEST_CASE("suite selection") {
  CHECK(run_suite("termcounts", 4).size() == 4);
  CHECK_THROWS_AS(run_suite("bogus", 0), std::invalid_argument);
}
