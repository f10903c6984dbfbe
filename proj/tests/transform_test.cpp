#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "recurrences.hpp"
#include "transform.hpp"

using namespace noncross;

namespace {

Sequence seq(std::vector<BigCount> v) { return Sequence{std::move(v)}; }

}  // namespace

TEST_CASE("forward transform, pinned rows") {
  CHECK(ncp_transform(seq({1, 1, 1, 1, 1, 1, 1})) ==
        seq({1, 1, 2, 5, 14, 42, 132}));
  CHECK(ncp_transform(seq({1, 1, 2, 6, 24, 120})) ==
        seq({1, 1, 3, 13, 69, 421}));
  CHECK(ncp_transform(seq({1, 2, 4, 8, 16, 32})) ==
        seq({1, 2, 8, 40, 224, 1344}));
  CHECK_THROWS_AS(ncp_transform(seq({2, 1})), std::invalid_argument);
}

TEST_CASE("inverse transform, pinned rows") {
  CHECK(ncp_inverse(seq({1, 1, 2, 5, 14, 42})) == seq({1, 1, 1, 1, 1, 1}));
  CHECK(ncp_inverse(seq({1, 1, 3, 13, 69, 421})) == seq({1, 1, 2, 6, 24, 120}));
  Sequence spiky = seq({1, 0, 0, 0, 0});
  CHECK(ncp_transform(ncp_inverse(spiky)) == spiky);
  CHECK_THROWS_AS(ncp_inverse(seq({0, 1})), std::invalid_argument);
}

TEST_CASE("roundtrip on random sequences") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Sequence a;
    a.terms.push_back(1);
    for (unsigned i = 1; i <= 20; ++i) a.terms.push_back(dist(rng));
    Sequence b = ncp_transform(a);
    CHECK(b.terms[0] == 1);
    CHECK(b.terms[1] == a.terms[1]);
    CHECK(ncp_inverse(b) == a);
  }
}

TEST_CASE("combinatorial oracle") {
  CHECK(ncp_oracle(seq({1, 1, 2, 6}), 2) == 3);
  CHECK(ncp_oracle(seq({1, 1, 1, 1, 1}), 4) == 14);
  CHECK(ncp_oracle(seq({1, 1, 2, 5}), 2) == 3);
  CHECK_THROWS_AS(ncp_oracle(seq({1, 1}), 13), bound_error);
}

TEST_CASE("oracle agrees with the transform") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Sequence a;
    a.terms.push_back(1);
    for (unsigned i = 1; i <= 7; ++i) a.terms.push_back(dist(rng));
    Sequence b = ncp_transform(a);
    for (unsigned k = 0; k <= 7; ++k) CHECK(ncp_oracle(a, k) == b.terms[k]);
  }
}

TEST_CASE("factorial weights reproduce the snl counts") {
  Sequence a;
  for (unsigned k = 0; k <= 12; ++k) a.terms.push_back(factorial(k));
  Sequence b = ncp_transform(a);
  CountTable t;
  for (unsigned k = 0; k <= 12; ++k) CHECK(b.terms[k] == t.snl(k));
}

TEST_CASE("table rows") {
  const auto& names = table_rows();
  CHECK(names.size() == 8);

  const TableRow& catalan_row = table_row("catalan");
  REQUIRE(catalan_row.has_expected);
  CHECK(catalan_row.expected(4).terms == std::vector<BigCount>{1, 1, 3, 12, 55});
  CHECK(ncp_transform(catalan_row.input(8)) == catalan_row.expected(8));

  const TableRow& half = table_row("half_central_binomial");
  CHECK(half.input(4).terms == std::vector<BigCount>{1, 1, 3, 10, 35});
  CHECK(half.expected(3).terms.back() == 20);
  CHECK(ncp_transform(half.input(8)) == half.expected(8));

  const TableRow& ones = table_row("ones");
  CHECK(ncp_transform(ones.input(8)) == ones.expected(8));
  const TableRow& powers2 = table_row("powers2");
  CHECK(ncp_transform(powers2.input(8)) == powers2.expected(8));

  // Rows without a closed output: pinned regression values generated by the
  // transform itself (NON-INDEPENDENT) plus the oracle cross-check.
  const TableRow& p2s = table_row("powers2_shift");
  Sequence b = ncp_transform(p2s.input(5));
  CHECK(b.terms == std::vector<BigCount>{1, 1, 3, 11, 45, 197});
  // The transform of 2^(k-1) matches the little Schroeder input generator.
  CHECK(b.terms == table_row("little_schroeder").input(5).terms);

  const TableRow& fib = table_row("fibonacci_shift");
  CHECK(fib.input(6).terms == std::vector<BigCount>{1, 0, 1, 1, 2, 3, 5});
  Sequence fib_out = ncp_transform(fib.input(6));
  for (unsigned k = 0; k <= 6; ++k)
    CHECK(ncp_oracle(fib.input(6), k) == fib_out.terms[k]);

  const TableRow& cs = table_row("catalan_shift");
  CHECK(cs.input(5).terms == std::vector<BigCount>{1, 1, 1, 2, 5, 14});
  CHECK(ncp_inverse(ncp_transform(cs.input(8))) == cs.input(8));

  CHECK_THROWS_AS(table_row("nope"), std::invalid_argument);
}

TEST_CASE("pattern 321 detection") {
  CHECK(avoids_pattern_321({}));
  CHECK(avoids_pattern_321({1}));
  CHECK(avoids_pattern_321({2, 1}));
  CHECK(avoids_pattern_321({1, 2, 3}));
  CHECK(avoids_pattern_321({2, 3, 1}));
  CHECK_FALSE(avoids_pattern_321({3, 2, 1}));
  CHECK_FALSE(avoids_pattern_321({5, 1, 4, 2}));
  CHECK(avoids_pattern_321({3, 4, 1, 2}));
}

TEST_CASE("sequence text styles") {
  ParsedSequence a = parse_sequence_text("1,1,2,5");
  CHECK(a.style == SequenceStyle::CommaLine);
  CHECK(a.seq.terms == std::vector<BigCount>{1, 1, 2, 5});
  CHECK(format_sequence(a.seq, a.style) == "1,1,2,5\n");

  ParsedSequence b = parse_sequence_text("1 1 2 5");
  CHECK(b.style == SequenceStyle::SpaceLine);
  CHECK(format_sequence(b.seq, b.style) == "1 1 2 5\n");

  ParsedSequence c = parse_sequence_text("1\n1\n2\n5\n");
  CHECK(c.style == SequenceStyle::Lines);
  CHECK(c.seq.terms == std::vector<BigCount>{1, 1, 2, 5});
  CHECK(format_sequence(c.seq, c.style) == "1\n1\n2\n5\n");

  ParsedSequence d = parse_sequence_text("0 1\n1 1\n2 2\n3 5\n");
  CHECK(d.style == SequenceStyle::IndexPairs);
  CHECK(d.first_index == 0);
  CHECK(d.seq.terms == std::vector<BigCount>{1, 1, 2, 5});
  CHECK(format_sequence(d.seq, d.style, d.first_index) ==
        "0 1\n1 1\n2 2\n3 5\n");

  // A start at index 1 leaves a_0 = 1 implicit and mirrors on output.
  ParsedSequence e = parse_sequence_text("1 1\n2 2\n3 5\n");
  CHECK(e.style == SequenceStyle::IndexPairs);
  CHECK(e.first_index == 1);
  CHECK(e.seq.terms == std::vector<BigCount>{1, 1, 2, 5});
  CHECK(format_sequence(e.seq, e.style, e.first_index) == "1 1\n2 2\n3 5\n");

  CHECK(parse_sequence_text("1, -2, 3").seq.terms ==
        std::vector<BigCount>{1, -2, 3});
  CHECK(parse_sequence_text("# header\n1\n2\n").seq.terms ==
        std::vector<BigCount>{1, 2});

  CHECK_THROWS_AS(parse_sequence_text(""), parse_error);
  CHECK_THROWS_AS(parse_sequence_text("1,x"), parse_error);
  CHECK_THROWS_AS(parse_sequence_text("5 1\n6 1\n"), parse_error);
  CHECK_THROWS_AS(parse_sequence_text("0 1\n2 2\n"), parse_error);
}
