#include "int_partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace noncross {

unsigned IntegerPartitionFreq::part_count() const {
  unsigned k = 0;
  for (unsigned m : freq) k += m;
  return k;
}

std::vector<unsigned> IntegerPartitionFreq::parts_descending() const {
  std::vector<unsigned> parts;
  for (unsigned i = n; i >= 1; --i)
    for (unsigned m = 0; m < freq[i - 1]; ++m) parts.push_back(i);
  return parts;
}

PartitionStream::PartitionStream(unsigned n) : n_(n) {}

bool PartitionStream::next(IntegerPartitionFreq& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
    if (n_ == 0) {
      done_ = true;
      out = {0, {}};
      return true;
    }
    parts_ = {n_};
  } else {
    // Decrement the rightmost part above 1 and redistribute what it and the
    // trailing ones held in chunks no larger than the decremented value.
    unsigned trailing_ones = 0;
    while (!parts_.empty() && parts_.back() == 1) {
      parts_.pop_back();
      ++trailing_ones;
    }
    if (parts_.empty()) {
      done_ = true;
      return false;
    }
    unsigned v = parts_.back() - 1;
    parts_.back() = v;
    unsigned rem = trailing_ones + 1;
    while (rem > 0) {
      unsigned chunk = std::min(v, rem);
      parts_.push_back(chunk);
      rem -= chunk;
    }
  }
  out.n = n_;
  out.freq.assign(n_, 0);
  for (unsigned p : parts_) ++out.freq[p - 1];
  return true;
}

WeakCompositionStream::WeakCompositionStream(unsigned total, unsigned k)
    : total_(total) {
  if (k == 0) throw std::invalid_argument("weak compositions need k >= 1");
  parts_.assign(k, 0);
  parts_.back() = total;
}

bool WeakCompositionStream::next(WeakComposition& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
  } else {
    // Lexicographic successor: bump the predecessor of the last nonzero
    // entry and flush the remainder to the tail.
    std::size_t j = parts_.size();
    while (j > 0 && parts_[j - 1] == 0) --j;
    if (j <= 1) {
      done_ = true;
      return false;
    }
    unsigned rest = parts_[j - 1] - 1;
    parts_[j - 1] = 0;
    ++parts_[j - 2];
    parts_.back() += rest;
  }
  out.total = total_;
  out.parts = parts_;
  return true;
}

}  // namespace noncross
