#pragma once

#include <string>
#include <vector>

#include "block_partition.hpp"
#include "dyck.hpp"

namespace noncross {

// Intermediate stages of the peak-labeled-path <-> set-of-lists bijection,
// for tracing. Each table stage holds the label / ascent / descent rows of
// the column table. The initial ascent row sums to n + 1 (the extra leading
// upstep) while its descent row sums to n; the rotated stage has the largest
// label in the last column; the truncated stage has one fewer column.
struct BijectionTrace {
  struct Table {
    std::vector<unsigned> labels, ascents, descents;
  };
  Table initial;        // after prepending the upstep
  Table rotated;        // largest label moved to the last column
  Table truncated;      // last column dropped
  Table partial_sums;   // ascent and descent rows partially summed
  std::vector<unsigned> first_entries;
  std::vector<unsigned> list_lengths;
  std::vector<unsigned> missing_fill_order;  // values inserted left to right
};

// Maps a peak-labeled Dyck n-path with k peaks to a partition of [n] into a
// set of n + 1 - k lists. Steps: prepend an upstep (first ascent + 1); rotate
// the label/ascent/descent columns so the largest label is last; drop that
// column; take partial sums of both length rows; the list first entries are
// [n] minus the ascent sums and the list lengths are the first differences
// of [n] minus the descent sums (first entry kept); the remaining numbers
// fill the blanks left to right, blank j receiving the ascent partial sum
// indexed by the j-th column label.
BlockPartition bijection_forward(const PeakLabeledDyckPath& p,
                                 BijectionTrace* trace = nullptr);

// Inverse: rebuild the truncated summed table from the lists, append the
// deleted column (its lengths are forced by the totals, its label is k),
// then pick the unique cyclic rotation of the columns that forms an upstep
// prefixed Dyck run sequence. The cycle lemma guarantees exactly one
// rotation validates; zero or several raise logic_error.
PeakLabeledDyckPath bijection_inverse(const BlockPartition& q,
                                      BijectionTrace* trace = nullptr);

std::string render_trace(const BijectionTrace& t);

}  // namespace noncross
