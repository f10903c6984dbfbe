#include "dyck.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace noncross {

unsigned DyckPath::size() const {
  unsigned n = 0;
  for (auto [a, d] : runs) n += a;
  return n;
}

DyckPath parse_dyck(std::string_view updown) {
  if (updown.empty()) throw parse_error("empty path", 0);
  DyckPath d;
  int height = 0;
  unsigned total_up = 0, total_down = 0;
  for (std::size_t i = 0; i < updown.size(); ++i) {
    char c = updown[i];
    if (c == 'U') {
      if (i == 0 || updown[i - 1] == 'D') d.runs.emplace_back(0u, 0u);
      ++d.runs.back().first;
      ++height;
      ++total_up;
    } else if (c == 'D') {
      if (i == 0) throw parse_error("path must start with U", 0);
      ++d.runs.back().second;
      --height;
      ++total_down;
      if (height < 0) throw parse_error("path dips below its start", i);
    } else {
      throw parse_error("expected 'U' or 'D'", i);
    }
  }
  if (total_up != total_down)
    throw parse_error("path does not return to its start", updown.size());
  return d;
}

std::string format_dyck(const DyckPath& d) {
  std::string s;
  for (auto [a, desc] : d.runs) {
    s.append(a, 'U');
    s.append(desc, 'D');
  }
  return s;
}

BlockPartition prodinger_to_partition(const DyckPath& d) {
  const unsigned n = d.size();
  std::vector<unsigned> stack;
  std::vector<std::vector<unsigned>> blocks;
  unsigned next_up = 1;
  for (auto [a, desc] : d.runs) {
    for (unsigned i = 0; i < a; ++i) stack.push_back(next_up++);
    blocks.emplace_back();
    for (unsigned i = 0; i < desc; ++i) {
      blocks.back().push_back(stack.back());
      stack.pop_back();
    }
  }
  return make_partition(n, std::move(blocks), false, false);
}

DyckPath prodinger_from_partition(const BlockPartition& p) {
  if (p.inner_ordered || p.outer_ordered)
    throw std::invalid_argument("expected a set of sets");
  if (!is_noncrossing(p))
    throw std::invalid_argument("partition is crossing");
  std::vector<unsigned> block_of(p.n + 1, 0);
  std::vector<unsigned> max_of(p.blocks.size(), 0);
  for (unsigned b = 0; b < p.blocks.size(); ++b)
    for (unsigned e : p.blocks[b]) {
      block_of[e] = b;
      max_of[b] = std::max(max_of[b], e);
    }
  DyckPath d;
  unsigned pending_up = 0;
  for (unsigned e = 1; e <= p.n; ++e) {
    ++pending_up;
    unsigned b = block_of[e];
    if (e == max_of[b]) {
      d.runs.emplace_back(pending_up,
                          static_cast<unsigned>(p.blocks[b].size()));
      pending_up = 0;
    }
  }
  return d;
}

DyckPathStream::DyckPathStream(unsigned n) : n_(n) {
  steps_.assign(2 * n, 'U');
  std::fill(steps_.begin() + n, steps_.end(), 'D');
  if (n == 0) done_ = true;
}

bool DyckPathStream::next(DyckPath& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
  } else {
    // Successor in lexicographic order (U < D): flip the rightmost U that
    // can become a D while the prefix stays valid, then append the smallest
    // completion U...UD...D.
    const unsigned L = 2 * n_;
    std::vector<int> depth(L);
    int h = 0;
    for (unsigned i = 0; i < L; ++i) {
      h += steps_[i] == 'U' ? 1 : -1;
      depth[i] = h;
    }
    bool found = false;
    for (unsigned i = L; i-- > 0;) {
      if (steps_[i] != 'U') continue;
      int before = i == 0 ? 0 : depth[i - 1];
      if (before < 1) continue;  // flipping would dip below the start
      unsigned r = L - 1 - i;    // positions after i
      unsigned downs = (r + before - 1) / 2;
      unsigned ups = r - downs;
      steps_[i] = 'D';
      std::fill(steps_.begin() + i + 1, steps_.begin() + i + 1 + ups, 'U');
      std::fill(steps_.begin() + i + 1 + ups, steps_.end(), 'D');
      found = true;
      break;
    }
    if (!found) {
      done_ = true;
      return false;
    }
  }
  out = parse_dyck(std::string_view(steps_.data(), steps_.size()));
  return true;
}

}  // namespace noncross
