#pragma once

#include <vector>

namespace noncross {

// Integer partition of n in frequency-of-parts form: freq[i-1] is the
// multiplicity of part i, so sum of i * freq[i-1] equals n.
struct IntegerPartitionFreq {
  unsigned n = 0;
  std::vector<unsigned> freq;  // size n; empty exactly when n == 0

  unsigned part_count() const;  // number of parts, sum of multiplicities
  std::vector<unsigned> parts_descending() const;

  bool operator==(const IntegerPartitionFreq&) const = default;
};

// Yields every integer partition of n exactly once, reverse-lexicographic on
// the descending part lists: (n) first, (1,1,...,1) last. n == 0 yields the
// single empty partition.
class PartitionStream {
 public:
  explicit PartitionStream(unsigned n);
  bool next(IntegerPartitionFreq& out);

 private:
  unsigned n_;
  std::vector<unsigned> parts_;  // current partition, parts descending
  bool first_ = true;
  bool done_ = false;
};

struct WeakComposition {
  unsigned total = 0;
  std::vector<unsigned> parts;

  bool operator==(const WeakComposition&) const = default;
};

// All C(total+k-1, k-1) nonnegative k-tuples summing to total, in
// lexicographic order: (0,...,0,total) first, (total,0,...,0) last. k >= 1.
class WeakCompositionStream {
 public:
  WeakCompositionStream(unsigned total, unsigned k);
  bool next(WeakComposition& out);

 private:
  unsigned total_;
  std::vector<unsigned> parts_;
  bool first_ = true;
  bool done_ = false;
};

}  // namespace noncross
