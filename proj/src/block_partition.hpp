#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace noncross {

// A partition of [n] into nonempty blocks, with flags telling whether the
// order inside a block and the order of the blocks carry meaning.
//
// Canonical storage makes structural equality coincide with family equality:
// when inner_ordered is false each block is kept sorted ascending, and when
// outer_ordered is false blocks are kept sorted by their first entry (for
// unordered blocks the first entry is the minimum). First entries are
// pairwise distinct since blocks are disjoint, so the order is total.
struct BlockPartition {
  unsigned n = 0;
  std::vector<std::vector<unsigned>> blocks;
  bool inner_ordered = false;
  bool outer_ordered = false;

  unsigned block_count() const { return static_cast<unsigned>(blocks.size()); }

  bool operator==(const BlockPartition&) const = default;
};

// Validates that blocks partition [n] exactly and applies canonical order
// per the flags. Throws std::invalid_argument on a malformed partition.
BlockPartition make_partition(unsigned n, std::vector<std::vector<unsigned>> blocks,
                              bool inner_ordered, bool outer_ordered);

// True iff no four elements a < b < c < d have a, c in one block and b, d in
// another. Order flags are ignored: crossing is a property of the underlying
// sets. Linear scan with a stack of open blocks.
bool is_noncrossing(const BlockPartition& p);

// Definitional O(n^4) quadruple scan; kept as an oracle for the linear test.
bool is_noncrossing_bruteforce(const BlockPartition& p);

// Display form for a noncrossing set partition: entries descending in each
// block, blocks ordered by increasing first (that is, largest) entry, blocks
// joined by "-". Entries are concatenated for n <= 9 and comma-separated
// otherwise.
std::string standard_form(const BlockPartition& p);

// Text format: blocks separated by "|", entries by ",". Order of appearance
// in the text is significant exactly when the corresponding flag is set.
std::string format_partition(const BlockPartition& p);

// Parses the format above; the ground-set size is the number of entries and
// the entries must be exactly 1..n. Throws parse_error with a position on
// duplicates, out-of-range entries, empty blocks, or malformed numbers.
BlockPartition parse_partition(std::string_view text, bool inner_ordered,
                               bool outer_ordered);

}  // namespace noncross
