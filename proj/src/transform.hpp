#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bigcount.hpp"

namespace noncross {

// An integer sequence a_0..a_T. Transform inputs and outputs require a_0 = 1.
struct Sequence {
  std::vector<BigCount> terms;

  bool operator==(const Sequence&) const = default;
};

// The noncrossing partition transform (a_k) -> (b_k): b is the unique
// sequence with sum_{k>=0} a_k (x B(x))^k = B(x). Computed by the triangular
// recurrence b_n = sum_{k=1..n} a_k [x^{n-k}] B^k, in which b_n only depends
// on b_0..b_{n-1}; every output is an exact integer. Requires a_0 = 1.
Sequence ncp_transform(const Sequence& a);

// The inverse map, via reversion: A(x) = x / reversion(x B(x)). This is a
// genuinely different code path from the forward triangle; their consistency
// is a test target. Requires b_0 = 1.
Sequence ncp_inverse(const Sequence& b);

// Independent combinatorial definition of the transform's value at k: sum
// over noncrossing set partitions P of [k] of prod_{blocks B} weights[|B|].
// weights[0] is unused. Enumerates all noncrossing partitions of [k], so k
// is capped (default 12; bound == 0 uses the default).
BigCount ncp_oracle(const Sequence& weights, unsigned k, unsigned bound = 0);

// True iff no three positions i < j < l carry strictly decreasing values.
bool avoids_pattern_321(const std::vector<unsigned>& values);

// Named example rows for the transform. Each row generates its input
// sequence; rows backed by a closed output formula also generate the
// expected output, the rest are validated by oracle and roundtrip only.
struct TableRow {
  std::string name;
  bool has_expected = false;
  Sequence (*input)(unsigned T) = nullptr;
  Sequence (*expected)(unsigned T) = nullptr;
};

const TableRow& table_row(const std::string& name);  // throws on unknown name
const std::vector<TableRow>& table_rows();

// Sequence file format: one integer per line; or a single comma- or
// whitespace-separated line; or index-value pairs per line ("k a_k") with
// consecutive indices starting at 0 or 1 (a start at 1 leaves the mandatory
// a_0 = 1 implicit). Formatting mirrors the parsed style.
enum class SequenceStyle { CommaLine, SpaceLine, Lines, IndexPairs };

struct ParsedSequence {
  Sequence seq;
  SequenceStyle style = SequenceStyle::CommaLine;
  unsigned first_index = 0;  // for IndexPairs
};

ParsedSequence parse_sequence_text(std::string_view text);
std::string format_sequence(const Sequence& seq, SequenceStyle style,
                            unsigned first_index = 0);

}  // namespace noncross
