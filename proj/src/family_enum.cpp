#include "family_enum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "errors.hpp"

namespace noncross {

Family parse_family(std::string_view code) {
  Family f;
  if (code.size() >= 3 && code.substr(code.size() - 3) == "-nc") {
    f.noncrossing = true;
    code = code.substr(0, code.size() - 3);
  }
  if (code.size() != 2 || (code[0] != 's' && code[0] != 'l') ||
      (code[1] != 's' && code[1] != 'l'))
    throw std::invalid_argument(
        "unknown family code; expected ss, sl, ls or ll with optional -nc");
  f.outer_list = code[0] == 'l';
  f.inner_list = code[1] == 'l';
  return f;
}

std::string family_code(const Family& f) {
  std::string s;
  s += f.outer_list ? 'l' : 's';
  s += f.inner_list ? 'l' : 's';
  if (f.noncrossing) s += "-nc";
  return s;
}

FamilyStream::FamilyStream(Family f, unsigned n) : f_(f), n_(n) {
  if (n_ == 0) throw std::invalid_argument("family enumeration needs n >= 1");
  rgs_.assign(n_, 0);
  rgs_max_.assign(n_, 0);
}

bool FamilyStream::next_rgs() {
  for (unsigned i = n_; i-- > 1;) {
    if (rgs_[i] <= rgs_max_[i - 1]) {
      ++rgs_[i];
      rgs_max_[i] = std::max(rgs_max_[i - 1], rgs_[i]);
      for (unsigned j = i + 1; j < n_; ++j) {
        rgs_[j] = 0;
        rgs_max_[j] = rgs_max_[i];
      }
      return true;
    }
  }
  return false;
}

// Builds base_ from rgs_ (blocks by first appearance, entries ascending) and
// resets the ordering odometers. False when the restriction filters it out.
bool FamilyStream::load_base() {
  unsigned k = rgs_max_[n_ - 1] + 1;
  base_.assign(k, {});
  for (unsigned e = 0; e < n_; ++e) base_[rgs_[e]].push_back(e + 1);
  if (f_.noncrossing &&
      !is_noncrossing(BlockPartition{n_, base_, false, false}))
    return false;
  arranged_ = base_;
  outer_perm_.resize(k);
  std::iota(outer_perm_.begin(), outer_perm_.end(), 0);
  return true;
}

void FamilyStream::emit(BlockPartition& out) {
  std::vector<std::vector<unsigned>> blocks(arranged_.size());
  for (std::size_t i = 0; i < arranged_.size(); ++i)
    blocks[i] = arranged_[f_.outer_list ? outer_perm_[i] : i];
  if (!f_.outer_list)
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.n = n_;
  out.blocks = std::move(blocks);
  out.inner_ordered = f_.inner_list;
  out.outer_ordered = f_.outer_list;
}

bool FamilyStream::next(BlockPartition& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
    if (!load_base()) {
      // The all-in-one-block base is never crossing, so this cannot happen,
      // but keep the generic path.
      while (next_rgs())
        if (load_base()) {
          emit(out);
          return true;
        }
      done_ = true;
      return false;
    }
    emit(out);
    return true;
  }
  // Innermost odometer: block order; then per-block arrangements with the
  // last block fastest; then the next base set partition.
  if (f_.outer_list &&
      std::next_permutation(outer_perm_.begin(), outer_perm_.end())) {
    emit(out);
    return true;
  }
  if (f_.inner_list) {
    for (std::size_t b = arranged_.size(); b-- > 0;) {
      if (std::next_permutation(arranged_[b].begin(), arranged_[b].end())) {
        std::iota(outer_perm_.begin(), outer_perm_.end(), 0);
        emit(out);
        return true;
      }
      // wrapped back to sorted; carry into the previous block
    }
  }
  while (next_rgs()) {
    if (load_base()) {
      emit(out);
      return true;
    }
  }
  done_ = true;
  return false;
}

PeakLabeledStream::PeakLabeledStream(unsigned n) : paths_(n) {}

bool PeakLabeledStream::next(PeakLabeledDyckPath& out) {
  if (have_path_ &&
      std::next_permutation(cur_.labels.begin(), cur_.labels.end())) {
    out = cur_;
    return true;
  }
  if (!paths_.next(cur_.path)) {
    have_path_ = false;
    return false;
  }
  have_path_ = true;
  cur_.labels.resize(cur_.path.peaks());
  std::iota(cur_.labels.begin(), cur_.labels.end(), 1);
  out = cur_;
  return true;
}

unsigned default_bruteforce_bound(Family f) {
  return (f.outer_list && f.inner_list) ? 8 : 10;
}

BigCount count_family_bruteforce(Family f, unsigned n, unsigned bound) {
  unsigned effective = bound == 0 ? default_bruteforce_bound(f) : bound;
  if (n > effective)
    throw bound_error("brute-force enumeration of family " + family_code(f) +
                      " is capped at n = " + std::to_string(effective) +
                      " (requested n = " + std::to_string(n) +
                      "); use the recurrence or closed-form count, or raise "
                      "the bound");
  FamilyStream s(f, n);
  BlockPartition p;
  unsigned long count = 0;
  while (s.next(p)) ++count;
  return BigCount(count);
}

}  // namespace noncross
