#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "recurrences.hpp"

using namespace noncross;

TEST_CASE("sets of noncrossing lists, published values") {
  CHECK(snl_count(0) == 1);
  CHECK(snl_count(1) == 1);
  CHECK(snl_count(2) == 3);
  CHECK(snl_count(3) == 13);
  CHECK(snl_count(4) == 69);
  CHECK(snl_count(5) == 421);
  CHECK(snl_count(6) == 2867);
}

TEST_CASE("slow recurrence agrees with the fast one") {
  CHECK(snl_count_slow(0) == 1);
  CHECK(snl_count_slow(4) == 69);
  CHECK(snl_count_slow(5) == 421);
  CountTable t;
  for (unsigned n = 0; n <= 12; ++n) CHECK(snl_count_slow(n) == t.snl(n));
  CHECK_THROWS_AS(snl_count_slow(15), bound_error);
  CHECK(snl_count_slow(15, 15) == snl_count(15));
}

TEST_CASE("lists of noncrossing lists") {
  CHECK(lnl_count_refined(2, 1) == 2);
  CHECK(lnl_count_refined(2, 2) == 2);
  CHECK(lnl_count(2) == 4);
  CHECK(lnl_count(4) == 184);
  const std::vector<BigCount> want = {1,    4,     24,     184,
                                      1680, 17592, 206472, 2674752};
  CountTable t;
  for (unsigned n = 1; n <= 8; ++n) CHECK(t.lnl(n) == want[n - 1]);
  // Refined values sum to the totals.
  for (unsigned n = 1; n <= 10; ++n) {
    BigCount sum = 0;
    for (unsigned j = 1; j <= n; ++j) sum += t.lnl_refined(n, j);
    CHECK(sum == t.lnl(n));
  }
  CHECK(lnl_count_refined(3, 4) == 0);
}

TEST_CASE("configuration stream") {
  ConfigurationStream s(3);
  Configuration c;
  std::vector<Configuration> all;
  while (s.next(c)) all.push_back(c);
  // Partitions of 3 in stream order: (3) with b = (2) and c in {1, 2};
  // (2,1) with b = (1); (1,1,1) with empty b.
  REQUIRE(all.size() == 4);
  CHECK(all[0].b == std::vector<unsigned>{2});
  CHECK(all[0].c == std::vector<unsigned>{1});
  CHECK(all[0].block_total() == 2);
  CHECK(all[1].b == std::vector<unsigned>{2});
  CHECK(all[1].c == std::vector<unsigned>{2});
  CHECK(all[1].block_total() == 3);
  CHECK(all[2].b == std::vector<unsigned>{1});
  CHECK(all[2].trailing_zero_count == 1);
  CHECK(all[3].b.empty());
  CHECK(all[3].trailing_zero_count == 3);
  CHECK(all[3].block_total() == 1);
}

TEST_CASE("closed counts") {
  CHECK(closed_count(parse_family("ls-nc"), 9) ==
        closed_count(parse_family("sl"), 9));
  CHECK(closed_count(parse_family("ll"), 3) == 24);
  CHECK(closed_count(parse_family("ss"), 4) == 15);
  CHECK(closed_count(parse_family("ss-nc"), 5) == 42);
  CHECK(closed_count(parse_family("ls"), 4) == 75);
  CHECK(closed_count(parse_family("sl"), 4) == 73);
  // The two formula-level sums agree far beyond enumeration range.
  for (unsigned n = 1; n <= 30; ++n)
    CHECK(closed_count(parse_family("ls-nc"), n) ==
          closed_count(parse_family("sl"), n));
}

TEST_CASE("bell and fubini") {
  const unsigned long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  const unsigned long fubini[] = {1, 1, 3, 13, 75, 541, 4683, 47293, 545835};
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(bell_number(n) == bell[n]);
    CHECK(fubini_number(n) == fubini[n]);
  }
}

TEST_CASE("term counts") {
  const std::vector<BigCount> plain = {1, 1, 2, 4, 8, 14, 27, 45, 82};
  const std::vector<BigCount> collected = {1, 1, 2, 4, 8, 14, 26, 44, 77};
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(term_count(n) == plain[n]);
    CHECK(term_count_refined(n) == collected[n]);
  }
  CHECK(term_count_gf(8).coeffs() == plain);
  CHECK(term_count_refined_gf(8).coeffs() == collected);
}

TEST_CASE("summand count of the refined recurrence equals the term count") {
  CountTable t;
  for (unsigned n = 1; n <= 12; ++n) CHECK(t.lnl_terms(n) == term_count(n));
}

TEST_CASE("snl series satisfies its fixed point equation") {
  const unsigned T = 10;
  CountTable t;
  PowerSeries u(T);
  for (unsigned n = 0; n <= T; ++n) u[n] = t.snl(n);
  PowerSeries xu = series_shift_up(u);
  PowerSeries acc(T), pw(T);
  pw[0] = 1;
  for (unsigned k = 0; k <= T; ++k) {
    acc = series_add(acc, series_scale(pw, factorial(k)));
    pw = series_mul(pw, xu);
  }
  CHECK(acc == u);
}
