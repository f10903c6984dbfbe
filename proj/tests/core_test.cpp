#include <random>

#include "bigcount.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "int_partitions.hpp"
#include "power_series.hpp"

using namespace noncross;

namespace {

std::vector<IntegerPartitionFreq> collect_partitions(unsigned n) {
  PartitionStream s(n);
  IntegerPartitionFreq p;
  std::vector<IntegerPartitionFreq> out;
  while (s.next(p)) out.push_back(p);
  return out;
}

std::vector<WeakComposition> collect_compositions(unsigned total, unsigned k) {
  WeakCompositionStream s(total, k);
  WeakComposition c;
  std::vector<WeakComposition> out;
  while (s.next(c)) out.push_back(c);
  return out;
}

PowerSeries random_series(std::mt19937& rng, unsigned order) {
  std::uniform_int_distribution<int> dist(-4, 4);
  PowerSeries f(order);
  for (unsigned i = 0; i <= order; ++i) f[i] = dist(rng);
  return f;
}

}  // namespace

TEST_CASE("counting helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(7, 2) == 21);
  CHECK(binomial(3, 5) == 0);

  CHECK(multinomial({}) == 1);
  CHECK(multinomial({2, 1}) == 3);
  CHECK(multinomial({1, 1, 1}) == 6);

  CHECK(lah(1, 1) == 1);
  CHECK(lah(3, 2) == 6);
  CHECK(lah(9, 4) == 846720);
  CHECK(lah(3, 4) == 0);

  CHECK(narayana(1, 1) == 1);
  CHECK(narayana(4, 2) == 6);
  CHECK(narayana(9, 4) == 1176);
  CHECK(narayana(4, 5) == 0);

  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
}

TEST_CASE("lah equals (n+1-k)! times narayana") {
  for (unsigned n = 1; n <= 30; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(factorial(n + 1 - k) * narayana(n, k) == lah(n, k));
}

TEST_CASE("partition stream order and counts") {
  auto p1 = collect_partitions(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].freq == std::vector<unsigned>{1});

  auto p3 = collect_partitions(3);
  REQUIRE(p3.size() == 3);
  // reverse-lexicographic: (3), (2,1), (1,1,1)
  CHECK(p3[0].parts_descending() == std::vector<unsigned>{3});
  CHECK(p3[1].parts_descending() == std::vector<unsigned>{2, 1});
  CHECK(p3[2].parts_descending() == std::vector<unsigned>{1, 1, 1});

  CHECK(collect_partitions(5).size() == 7);

  auto p0 = collect_partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].freq.empty());

  const unsigned long want[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (unsigned n = 0; n <= 12; ++n) {
    auto all = collect_partitions(n);
    CHECK(all.size() == want[n]);
    for (const auto& pi : all) {
      unsigned long sum = 0;
      for (unsigned i = 1; i <= n; ++i) sum += i * pi.freq[i - 1];
      CHECK(sum == n);
      CHECK(pi.part_count() >= (n ? 1u : 0u));
      CHECK(pi.part_count() <= n);
    }
  }
}

TEST_CASE("weak composition stream") {
  auto z = collect_compositions(0, 2);
  REQUIRE(z.size() == 1);
  CHECK(z[0].parts == std::vector<unsigned>{0, 0});

  auto c22 = collect_compositions(2, 2);
  REQUIRE(c22.size() == 3);
  CHECK(c22[0].parts == std::vector<unsigned>{0, 2});
  CHECK(c22[1].parts == std::vector<unsigned>{1, 1});
  CHECK(c22[2].parts == std::vector<unsigned>{2, 0});

  CHECK(collect_compositions(5, 3).size() == 21);

  for (unsigned total = 0; total <= 10; ++total)
    for (unsigned k = 1; k <= 6; ++k)
      CHECK(BigCount(collect_compositions(total, k).size()) ==
            binomial(total + k - 1, k - 1));
}

TEST_CASE("series multiplication") {
  PowerSeries one_plus_x(2, {1, 1});
  PowerSeries one_minus_x(2, {1, -1});
  CHECK(series_mul(one_plus_x, one_minus_x) == PowerSeries(2, {1, 0, -1}));

  PowerSeries f(2, {1, 1, 1});
  CHECK(series_mul(f, f) == PowerSeries(2, {1, 2, 3}));

  PowerSeries geo(3, {1, 1, 1, 1});
  CHECK(series_mul(geo, geo) == PowerSeries(3, {1, 2, 3, 4}));

  CHECK_THROWS_AS(series_mul(PowerSeries(2), PowerSeries(3)),
                  std::invalid_argument);
}

TEST_CASE("series multiplication is associative and commutative") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    PowerSeries a = random_series(rng, 8);
    PowerSeries b = random_series(rng, 8);
    PowerSeries c = random_series(rng, 8);
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
  }
}

TEST_CASE("series reversion") {
  PowerSeries identity(4, {0, 1});
  CHECK(series_reversion(identity) == identity);

  // x(1 - x) reverts to x times the Catalan series.
  PowerSeries f(6, {0, 1, -1});
  PowerSeries g = series_reversion(f);
  CHECK(g == PowerSeries(6, {0, 1, 1, 2, 5, 14, 42}));
  CHECK(series_compose(f, g) == PowerSeries(6, {0, 1}));

  PowerSeries h(4, {0, 1, -1, -1});
  CHECK(series_compose(h, series_reversion(h)) == PowerSeries(4, {0, 1}));

  CHECK_THROWS_AS(series_reversion(PowerSeries(3, {1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_reversion(PowerSeries(3, {0, 2})),
                  std::invalid_argument);
}

TEST_CASE("reversion is an involution on random normalized series") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    PowerSeries f(10);
    f[1] = 1;
    for (unsigned i = 2; i <= 10; ++i) f[i] = dist(rng);
    CHECK(series_reversion(series_reversion(f)) == f);
  }
}

TEST_CASE("series reciprocal") {
  PowerSeries f(5, {1, -1});
  CHECK(series_reciprocal(f) == PowerSeries(5, {1, 1, 1, 1, 1, 1}));
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    PowerSeries g(8);
    g[0] = 1;
    for (unsigned i = 1; i <= 8; ++i) g[i] = dist(rng);
    PowerSeries unit(8);
    unit[0] = 1;
    CHECK(series_mul(g, series_reciprocal(g)) == unit);
  }
  CHECK_THROWS_AS(series_reciprocal(PowerSeries(2, {2})), std::invalid_argument);
}
