#include "block_partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace noncross {

namespace {

void canonicalize(BlockPartition& p) {
  if (!p.inner_ordered)
    for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  if (!p.outer_ordered)
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

void validate(const BlockPartition& p) {
  std::vector<bool> seen(p.n, false);
  unsigned count = 0;
  for (const auto& b : p.blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    for (unsigned e : b) {
      if (e < 1 || e > p.n)
        throw std::invalid_argument("entry " + std::to_string(e) +
                                    " outside [1, " + std::to_string(p.n) + "]");
      if (seen[e - 1])
        throw std::invalid_argument("duplicate entry " + std::to_string(e));
      seen[e - 1] = true;
      ++count;
    }
  }
  if (count != p.n)
    throw std::invalid_argument("blocks do not cover [1, " +
                                std::to_string(p.n) + "]");
}

}  // namespace

BlockPartition make_partition(unsigned n, std::vector<std::vector<unsigned>> blocks,
                              bool inner_ordered, bool outer_ordered) {
  BlockPartition p{n, std::move(blocks), inner_ordered, outer_ordered};
  validate(p);
  canonicalize(p);
  return p;
}

bool is_noncrossing(const BlockPartition& p) {
  if (p.n == 0) return true;
  std::vector<unsigned> block_of(p.n + 1, 0);
  std::vector<unsigned> min_of(p.blocks.size()), max_of(p.blocks.size());
  for (unsigned b = 0; b < p.blocks.size(); ++b) {
    unsigned lo = p.n + 1, hi = 0;
    for (unsigned e : p.blocks[b]) {
      block_of[e] = b;
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    min_of[b] = lo;
    max_of[b] = hi;
  }
  // An element of an already open block must find its block on top of the
  // stack; anything opened in between and still open would cross it.
  std::vector<unsigned> stack;
  for (unsigned e = 1; e <= p.n; ++e) {
    unsigned b = block_of[e];
    if (e == min_of[b]) stack.push_back(b);
    if (stack.empty() || stack.back() != b) return false;
    if (e == max_of[b]) stack.pop_back();
  }
  return true;
}

bool is_noncrossing_bruteforce(const BlockPartition& p) {
  std::vector<unsigned> block_of(p.n + 1, 0);
  for (unsigned b = 0; b < p.blocks.size(); ++b)
    for (unsigned e : p.blocks[b]) block_of[e] = b;
  for (unsigned a = 1; a <= p.n; ++a)
    for (unsigned b = a + 1; b <= p.n; ++b)
      for (unsigned c = b + 1; c <= p.n; ++c)
        for (unsigned d = c + 1; d <= p.n; ++d)
          if (block_of[a] == block_of[c] && block_of[b] == block_of[d] &&
              block_of[a] != block_of[b])
            return false;
  return true;
}

std::string standard_form(const BlockPartition& p) {
  std::vector<std::vector<unsigned>> blocks = p.blocks;
  for (auto& b : blocks) std::sort(b.begin(), b.end(), std::greater<>());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += '-';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j && p.n > 9) out += ',';
      out += std::to_string(blocks[i][j]);
    }
  }
  return out;
}

std::string format_partition(const BlockPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < p.blocks[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(p.blocks[i][j]);
    }
  }
  return out;
}

BlockPartition parse_partition(std::string_view text, bool inner_ordered,
                               bool outer_ordered) {
  std::vector<std::vector<unsigned>> blocks;
  std::vector<std::vector<std::size_t>> at;  // entry start offsets, per block
  blocks.emplace_back();
  at.emplace_back();
  std::size_t i = 0;
  const std::size_t len = text.size();
  bool expect_entry = true;
  while (i < len) {
    char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      std::size_t start = i;
      unsigned long v = 0;
      while (i < len && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw parse_error("entry too large", start);
        ++i;
      }
      if (v == 0) throw parse_error("entries start at 1", start);
      blocks.back().push_back(static_cast<unsigned>(v));
      at.back().push_back(start);
      expect_entry = false;
      if (i < len) {
        if (text[i] == ',') {
          ++i;
          expect_entry = true;
        } else if (text[i] == '|') {
          ++i;
          blocks.emplace_back();
          at.emplace_back();
          expect_entry = true;
        } else {
          throw parse_error("expected ',' or '|'", i);
        }
      }
    } else if (ch == ',' || ch == '|') {
      throw parse_error("empty block or missing entry", i);
    } else {
      throw parse_error("unexpected character", i);
    }
  }
  if (expect_entry) throw parse_error("trailing separator or empty block", len);

  unsigned n = 0;
  for (const auto& b : blocks) n += static_cast<unsigned>(b.size());
  std::vector<bool> seen(n + 1, false);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t j = 0; j < blocks[b].size(); ++j) {
      unsigned e = blocks[b][j];
      if (e > n)
        throw parse_error("entry " + std::to_string(e) + " outside [1, " +
                              std::to_string(n) + "]",
                          at[b][j]);
      if (seen[e])
        throw parse_error("duplicate entry " + std::to_string(e), at[b][j]);
      seen[e] = true;
    }
  return make_partition(n, std::move(blocks), inner_ordered, outer_ordered);
}

}  // namespace noncross
