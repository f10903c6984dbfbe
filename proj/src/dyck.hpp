#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "block_partition.hpp"

namespace noncross {

// A Dyck path stored as its run-length pairs: (ascent, descent) with both
// lengths >= 1. Total ascents equal total descents, every proper prefix has
// at least as many upsteps as downsteps, and the number of peaks equals the
// number of runs.
struct DyckPath {
  std::vector<std::pair<unsigned, unsigned>> runs;

  unsigned size() const;   // n, the number of upsteps
  unsigned peaks() const { return static_cast<unsigned>(runs.size()); }

  bool operator==(const DyckPath&) const = default;
};

// A Dyck path whose peaks carry the labels 1..m in some order.
struct PeakLabeledDyckPath {
  DyckPath path;
  std::vector<unsigned> labels;  // permutation of [peaks]

  bool operator==(const PeakLabeledDyckPath&) const = default;
};

// Parses a string over {U, D}; throws parse_error if unbalanced, dipping
// below the start, or containing other characters.
DyckPath parse_dyck(std::string_view updown);

std::string format_dyck(const DyckPath& d);

// Number the upsteps 1..n left to right, label each downstep with the number
// on its matching upstep; the blocks are the label sets of the maximal
// descent runs. The image is always a noncrossing set partition with one
// block per peak.
BlockPartition prodinger_to_partition(const DyckPath& d);

// Inverse of the map above: requires a noncrossing set of sets. After each
// element that is the maximum of its block, the path descends once per
// element of that block.
DyckPath prodinger_from_partition(const BlockPartition& p);

// All Dyck n-paths, lexicographic on the step strings with U < D:
// U^n D^n first, (UD)^n last.
class DyckPathStream {
 public:
  explicit DyckPathStream(unsigned n);
  bool next(DyckPath& out);

 private:
  unsigned n_;
  std::vector<char> steps_;  // 'U' / 'D'
  bool first_ = true;
  bool done_ = false;
};

}  // namespace noncross
