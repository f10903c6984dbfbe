#pragma once

#include <string>
#include <string_view>

#include "bigcount.hpp"
#include "block_partition.hpp"
#include "dyck.hpp"

namespace noncross {

// One of the eight partition families: blocks and block contents each either
// ordered (list) or unordered (set), optionally restricted to noncrossing.
struct Family {
  bool outer_list = false;
  bool inner_list = false;
  bool noncrossing = false;

  bool operator==(const Family&) const = default;
};

// Codes "ss", "sl", "ls", "ll" (outer then inner, s = set, l = list) with
// optional "-nc" suffix, e.g. "sl-nc" = sets of noncrossing lists.
Family parse_family(std::string_view code);
std::string family_code(const Family& f);

// Yields each member of the family exactly once. Order: restricted-growth
// set partitions ascending, then per-block permutations (last block varying
// fastest), then block orderings when the outer level is a list; crossing
// base partitions are skipped when the restriction is set (crossing does not
// depend on the orderings). Members are in canonical storage form.
class FamilyStream {
 public:
  FamilyStream(Family f, unsigned n);
  bool next(BlockPartition& out);

 private:
  bool next_rgs();
  bool load_base();
  void emit(BlockPartition& out);

  Family f_;
  unsigned n_;
  std::vector<unsigned> rgs_;
  std::vector<unsigned> rgs_max_;
  std::vector<std::vector<unsigned>> base_;      // current set partition
  std::vector<std::vector<unsigned>> arranged_;  // with inner orderings applied
  std::vector<unsigned> outer_perm_;
  bool first_ = true;
  bool done_ = false;
};

// Every Dyck n-path paired with every permutation labeling of its peaks;
// labels vary fastest, lexicographically.
class PeakLabeledStream {
 public:
  explicit PeakLabeledStream(unsigned n);
  bool next(PeakLabeledDyckPath& out);

 private:
  DyckPathStream paths_;
  PeakLabeledDyckPath cur_;
  bool have_path_ = false;
};

// Stream length of FamilyStream, guarded by a feasibility bound: by default
// n <= 8 when both levels are lists and n <= 10 otherwise. bound == 0 uses
// the default; a larger explicit bound is the caller's opt-in. Beyond the
// bound a bound_error points at the counting paths.
BigCount count_family_bruteforce(Family f, unsigned n, unsigned bound = 0);

unsigned default_bruteforce_bound(Family f);

}  // namespace noncross
