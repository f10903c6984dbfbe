#include <set>
#include <string>

#include "bigcount.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "family_enum.hpp"
#include "recurrences.hpp"

using namespace noncross;

namespace {

std::vector<std::string> collect(Family f, unsigned n) {
  FamilyStream s(f, n);
  BlockPartition p;
  std::vector<std::string> out;
  while (s.next(p)) out.push_back(format_partition(p));
  return out;
}

}  // namespace

TEST_CASE("family codes") {
  CHECK(parse_family("ss") == Family{false, false, false});
  CHECK(parse_family("sl-nc") == Family{false, true, true});
  CHECK(parse_family("ls") == Family{true, false, false});
  CHECK(parse_family("ll-nc") == Family{true, true, true});
  CHECK(family_code(parse_family("ls-nc")) == "ls-nc");
  CHECK_THROWS_AS(parse_family("xx"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("sl-n"), std::invalid_argument);
}

TEST_CASE("set partitions of 3") {
  auto items = collect(parse_family("ss"), 3);
  CHECK(items.size() == 5);  // Bell(3)
  std::set<std::string> unique(items.begin(), items.end());
  CHECK(unique.size() == items.size());
}

TEST_CASE("lists of lists of 2") {
  auto items = collect(parse_family("ll"), 2);
  REQUIRE(items.size() == 4);
  std::set<std::string> got(items.begin(), items.end());
  CHECK(got == std::set<std::string>{"1,2", "2,1", "1|2", "2|1"});
}

TEST_CASE("noncrossing set partitions of 4") {
  auto items = collect(parse_family("ss-nc"), 4);
  CHECK(items.size() == 14);
  for (const auto& text : items) CHECK(text != "1,3|2,4");
  auto all = collect(parse_family("ss"), 4);
  CHECK(all.size() == 15);
}

TEST_CASE("brute force counts match spec examples") {
  CHECK(count_family_bruteforce(parse_family("ll-nc"), 4) == 184);
  CHECK(count_family_bruteforce(parse_family("sl-nc"), 4) == 69);
  CHECK(count_family_bruteforce(parse_family("ls-nc"), 3) == 13);
}

TEST_CASE("brute force counts match closed counts") {
  for (const char* code :
       {"ss", "sl", "ls", "ll", "ss-nc", "sl-nc", "ls-nc", "ll-nc"}) {
    Family f = parse_family(code);
    for (unsigned n = 1; n <= 6; ++n)
      CHECK(count_family_bruteforce(f, n) == closed_count(f, n));
  }
}

TEST_CASE("restriction changes nothing below four elements") {
  for (const char* code : {"ss", "sl", "ls", "ll"}) {
    Family plain = parse_family(code);
    Family restricted = plain;
    restricted.noncrossing = true;
    for (unsigned n = 1; n <= 3; ++n)
      CHECK(count_family_bruteforce(plain, n) ==
            count_family_bruteforce(restricted, n));
  }
}

TEST_CASE("streams contain no duplicates") {
  for (const char* code : {"sl", "ls", "ll", "sl-nc", "ls-nc", "ll-nc"}) {
    auto items = collect(parse_family(code), 5);
    std::set<std::string> unique(items.begin(), items.end());
    CHECK(unique.size() == items.size());
  }
}

TEST_CASE("feasibility bound") {
  CHECK_THROWS_AS(count_family_bruteforce(parse_family("ll"), 9),
                  bound_error);
  CHECK_THROWS_AS(count_family_bruteforce(parse_family("ss"), 11),
                  bound_error);
  // An explicit bound is an opt-in.
  CHECK(count_family_bruteforce(parse_family("ss"), 11, 11) == bell_number(11));
}

TEST_CASE("peak-labeled stream") {
  PeakLabeledStream one(1);
  PeakLabeledDyckPath p;
  REQUIRE(one.next(p));
  CHECK(format_dyck(p.path) == "UD");
  CHECK(p.labels == std::vector<unsigned>{1});
  CHECK_FALSE(one.next(p));

  PeakLabeledStream two(2);
  std::vector<std::pair<std::string, std::vector<unsigned>>> items;
  while (two.next(p)) items.emplace_back(format_dyck(p.path), p.labels);
  REQUIRE(items.size() == 3);
  CHECK(items[0] == std::pair<std::string, std::vector<unsigned>>{"UUDD", {1}});
  CHECK(items[1] ==
        std::pair<std::string, std::vector<unsigned>>{"UDUD", {1, 2}});
  CHECK(items[2] ==
        std::pair<std::string, std::vector<unsigned>>{"UDUD", {2, 1}});

  PeakLabeledStream three(3);
  unsigned long count = 0;
  while (three.next(p)) ++count;
  CHECK(count == 13);
}
