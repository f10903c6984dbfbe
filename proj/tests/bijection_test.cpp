#include <map>
#include <set>
#include <string>

#include "bijection.hpp"
#include "bigcount.hpp"
#include "doctest.h"
#include "family_enum.hpp"

using namespace noncross;

TEST_CASE("worked example, forward with trace") {
  PeakLabeledDyckPath p{parse_dyck("UUUDUUDDDUUDDDUUDD"), {3, 1, 4, 2}};
  BijectionTrace trace;
  BlockPartition image = bijection_forward(p, &trace);
  CHECK(format_partition(image) == "1|3,6,8|4|5,2|7|9");

  CHECK(trace.initial.labels == std::vector<unsigned>{3, 1, 4, 2});
  CHECK(trace.initial.ascents == std::vector<unsigned>{4, 2, 2, 2});
  CHECK(trace.initial.descents == std::vector<unsigned>{1, 3, 3, 2});

  CHECK(trace.rotated.labels == std::vector<unsigned>{2, 3, 1, 4});
  CHECK(trace.rotated.ascents == std::vector<unsigned>{2, 4, 2, 2});
  CHECK(trace.rotated.descents == std::vector<unsigned>{2, 1, 3, 3});

  CHECK(trace.truncated.labels == std::vector<unsigned>{2, 3, 1});
  CHECK(trace.partial_sums.ascents == std::vector<unsigned>{2, 6, 8});
  CHECK(trace.partial_sums.descents == std::vector<unsigned>{2, 3, 6});

  CHECK(trace.first_entries == std::vector<unsigned>{1, 3, 4, 5, 7, 9});
  CHECK(trace.list_lengths == std::vector<unsigned>{1, 3, 1, 2, 1, 1});
  CHECK(trace.missing_fill_order == std::vector<unsigned>{6, 8, 2});
}

TEST_CASE("worked example, inverse") {
  BlockPartition q = parse_partition("1|3,6,8|4|5,2|7|9", true, false);
  PeakLabeledDyckPath p = bijection_inverse(q);
  CHECK(format_dyck(p.path) == "UUUDUUDDDUUDDDUUDD");
  CHECK(p.labels == std::vector<unsigned>{3, 1, 4, 2});
}

TEST_CASE("small cases") {
  PeakLabeledDyckPath ud{parse_dyck("UD"), {1}};
  CHECK(format_partition(bijection_forward(ud)) == "1");
  CHECK(bijection_inverse(parse_partition("1", true, false)) == ud);

  PeakLabeledDyckPath up12{parse_dyck("UDUD"), {1, 2}};
  CHECK(format_partition(bijection_forward(up12)) == "1,2");
  PeakLabeledDyckPath up21{parse_dyck("UDUD"), {2, 1}};
  CHECK(format_partition(bijection_forward(up21)) == "2,1");
  PeakLabeledDyckPath uudd{parse_dyck("UUDD"), {1}};
  CHECK(format_partition(bijection_forward(uudd)) == "1|2");

  CHECK(bijection_inverse(parse_partition("1,2", true, false)) == up12);
  CHECK(bijection_inverse(parse_partition("2,1", true, false)) == up21);
  CHECK(bijection_inverse(parse_partition("1|2", true, false)) == uudd);
}

TEST_CASE("peak count maps to list count") {
  PeakLabeledStream s(6);
  PeakLabeledDyckPath p;
  while (s.next(p)) {
    BlockPartition q = bijection_forward(p);
    CHECK(q.block_count() == 7 - p.path.peaks());
  }
}

TEST_CASE("exhaustive roundtrips up to n = 5") {
  for (unsigned n = 1; n <= 5; ++n) {
    std::set<std::string> images;
    PeakLabeledStream s(n);
    PeakLabeledDyckPath p;
    while (s.next(p)) {
      BlockPartition q = bijection_forward(p);
      CHECK(images.insert(format_partition(q)).second);
      CHECK(bijection_inverse(q) == p);
    }

    FamilyStream lists(parse_family("sl"), n);
    BlockPartition q;
    unsigned long count = 0;
    while (lists.next(q)) {
      ++count;
      CHECK(bijection_forward(bijection_inverse(q)) == q);
    }
    CHECK(count == images.size());
  }
}

TEST_CASE("image counts are lah numbers") {
  for (unsigned n = 1; n <= 6; ++n) {
    std::map<unsigned, unsigned long> by_peaks;
    PeakLabeledStream s(n);
    PeakLabeledDyckPath p;
    while (s.next(p)) ++by_peaks[p.path.peaks()];
    for (auto [k, cnt] : by_peaks) CHECK(BigCount(cnt) == lah(n, n + 1 - k));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(bijection_forward({parse_dyck("UDUD"), {1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(bijection_forward({parse_dyck("UDUD"), {1}}),
                  std::invalid_argument);
  // The inverse needs a set of lists.
  CHECK_THROWS_AS(bijection_inverse(parse_partition("1|2", false, false)),
                  std::invalid_argument);
}

TEST_CASE("trace renders every stage") {
  PeakLabeledDyckPath p{parse_dyck("UUUDUUDDDUUDDDUUDD"), {3, 1, 4, 2}};
  BijectionTrace trace;
  bijection_forward(p, &trace);
  std::string text = render_trace(trace);
  CHECK(text.find("largest label rotated last") != std::string::npos);
  CHECK(text.find("2 6 8") != std::string::npos);
  CHECK(text.find("fill order") != std::string::npos);
}
