#include "bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace noncross {

namespace {

using Table = BijectionTrace::Table;

std::vector<unsigned> complement_in_n(unsigned n, std::vector<unsigned> taken) {
  std::vector<bool> hit(n + 1, false);
  for (unsigned v : taken) hit[v] = true;
  std::vector<unsigned> out;
  for (unsigned v = 1; v <= n; ++v)
    if (!hit[v]) out.push_back(v);
  return out;
}

std::vector<unsigned> partial_sums(const std::vector<unsigned>& v) {
  std::vector<unsigned> out(v.size());
  unsigned acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = acc += v[i];
  return out;
}

Table rotate_columns(const Table& t, unsigned shift) {
  const std::size_t k = t.labels.size();
  Table r;
  r.labels.resize(k);
  r.ascents.resize(k);
  r.descents.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t src = (j + shift) % k;
    r.labels[j] = t.labels[src];
    r.ascents[j] = t.ascents[src];
    r.descents[j] = t.descents[src];
  }
  return r;
}

// A run table is an upstep-prefixed Dyck sequence when its first ascent has
// room for the extra leading upstep and the walk stays strictly above the
// start after the first step. Heights only need checking at run boundaries,
// where the walk is lowest.
bool is_prepended_dyck(const Table& t) {
  if (t.ascents.empty() || t.ascents.front() < 2) return false;
  long h = 0;
  for (std::size_t j = 0; j < t.ascents.size(); ++j) {
    h += static_cast<long>(t.ascents[j]) - static_cast<long>(t.descents[j]);
    if (h < 1) return false;
  }
  return h == 1;
}

}  // namespace

BlockPartition bijection_forward(const PeakLabeledDyckPath& p,
                                 BijectionTrace* trace) {
  const unsigned k = p.path.peaks();
  const unsigned n = p.path.size();
  if (k == 0) throw std::invalid_argument("empty path");
  if (p.labels.size() != k)
    throw std::invalid_argument("labels do not match the peak count");
  {
    long h = 0;
    unsigned down = 0;
    for (auto [a, d] : p.path.runs) {
      if (a < 1 || d < 1) throw std::invalid_argument("runs must be nonempty");
      h += static_cast<long>(a) - static_cast<long>(d);
      down += d;
      if (h < 0) throw std::invalid_argument("path dips below its start");
    }
    if (n != down) throw std::invalid_argument("path does not return to its start");
    std::vector<bool> seen(k + 1, false);
    for (unsigned lab : p.labels) {
      if (lab < 1 || lab > k || seen[lab])
        throw std::invalid_argument("labels must be a permutation of 1..peaks");
      seen[lab] = true;
    }
  }

  Table initial;
  initial.labels = p.labels;
  for (auto [a, d] : p.path.runs) {
    initial.ascents.push_back(a);
    initial.descents.push_back(d);
  }
  initial.ascents.front() += 1;  // the prepended upstep

  unsigned largest_at = static_cast<unsigned>(
      std::find(initial.labels.begin(), initial.labels.end(), k) -
      initial.labels.begin());
  Table rotated = rotate_columns(initial, (largest_at + 1) % k);

  Table truncated = rotated;
  truncated.labels.pop_back();
  truncated.ascents.pop_back();
  truncated.descents.pop_back();

  Table summed = truncated;
  summed.ascents = partial_sums(truncated.ascents);
  summed.descents = partial_sums(truncated.descents);

  std::vector<unsigned> first_entries = complement_in_n(n, summed.ascents);
  std::vector<unsigned> kept = complement_in_n(n, summed.descents);
  std::vector<unsigned> lengths(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    lengths[i] = i == 0 ? kept[0] : kept[i] - kept[i - 1];

  // Blank j (left to right) receives the ascent partial sum whose index is
  // the j-th column label; the ascent sums are exactly the missing numbers,
  // in increasing order.
  std::vector<unsigned> fill;
  fill.reserve(summed.labels.size());
  for (unsigned lab : summed.labels) fill.push_back(summed.ascents[lab - 1]);

  std::vector<std::vector<unsigned>> blocks(first_entries.size());
  std::size_t next_fill = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].push_back(first_entries[i]);
    for (unsigned j = 1; j < lengths[i]; ++j)
      blocks[i].push_back(fill[next_fill++]);
  }

  if (trace) {
    trace->initial = initial;
    trace->rotated = rotated;
    trace->truncated = truncated;
    trace->partial_sums = summed;
    trace->first_entries = first_entries;
    trace->list_lengths = lengths;
    trace->missing_fill_order = fill;
  }
  return make_partition(n, std::move(blocks), true, false);
}

PeakLabeledDyckPath bijection_inverse(const BlockPartition& q,
                                      BijectionTrace* trace) {
  if (!q.inner_ordered || q.outer_ordered)
    throw std::invalid_argument("expected a set of lists");
  const unsigned n = q.n;
  const unsigned m = q.block_count();
  if (n == 0 || m == 0) throw std::invalid_argument("empty partition");
  const unsigned k = n + 1 - m;

  // Canonical storage orders the lists by first entry, matching the forward
  // construction.
  std::vector<unsigned> first_entries, lengths, blanks;
  for (const auto& block : q.blocks) {
    first_entries.push_back(block.front());
    lengths.push_back(static_cast<unsigned>(block.size()));
    for (std::size_t j = 1; j < block.size(); ++j) blanks.push_back(block[j]);
  }
  std::vector<unsigned> ascent_sums = complement_in_n(n, first_entries);
  std::vector<unsigned> kept = partial_sums(lengths);
  std::vector<unsigned> descent_sums = complement_in_n(n, kept);

  // Labels: blank j holds the ascent sum of the column labeled with the rank
  // of its value among the missing numbers.
  std::vector<unsigned> rank(n + 1, 0);
  for (std::size_t i = 0; i < ascent_sums.size(); ++i)
    rank[ascent_sums[i]] = static_cast<unsigned>(i) + 1;
  Table summed;
  for (unsigned v : blanks) summed.labels.push_back(rank[v]);
  summed.ascents = ascent_sums;
  summed.descents = descent_sums;

  Table truncated;
  truncated.labels = summed.labels;
  for (std::size_t i = 0; i < ascent_sums.size(); ++i) {
    truncated.ascents.push_back(i == 0 ? ascent_sums[0]
                                       : ascent_sums[i] - ascent_sums[i - 1]);
    truncated.descents.push_back(i == 0 ? descent_sums[0]
                                        : descent_sums[i] - descent_sums[i - 1]);
  }

  // The deleted column: its label is the largest, k, and its lengths are
  // forced by the row totals n + 1 and n.
  Table rotated = truncated;
  rotated.labels.push_back(k);
  rotated.ascents.push_back(n + 1 - (ascent_sums.empty() ? 0 : ascent_sums.back()));
  rotated.descents.push_back(n - (descent_sums.empty() ? 0 : descent_sums.back()));

  unsigned valid_shift = 0, valid_count = 0;
  for (unsigned s = 0; s < k; ++s) {
    if (is_prepended_dyck(rotate_columns(rotated, s))) {
      valid_shift = s;
      ++valid_count;
    }
  }
  if (valid_count != 1)
    throw std::logic_error("cycle lemma violation: " +
                           std::to_string(valid_count) +
                           " rotations validate instead of exactly one");
  Table initial = rotate_columns(rotated, valid_shift);

  PeakLabeledDyckPath out;
  out.labels = initial.labels;
  for (std::size_t j = 0; j < initial.ascents.size(); ++j)
    out.path.runs.emplace_back(initial.ascents[j] - (j == 0 ? 1 : 0),
                               initial.descents[j]);

  if (trace) {
    trace->initial = initial;
    trace->rotated = rotated;
    trace->truncated = truncated;
    trace->partial_sums = summed;
    trace->first_entries = first_entries;
    trace->list_lengths = lengths;
    trace->missing_fill_order = blanks;
  }
  return out;
}

namespace {

void render_table(std::string& out, const std::string& title, const Table& t) {
  auto row = [&out](const char* name, const std::vector<unsigned>& v) {
    out += name;
    for (unsigned x : v) {
      out += ' ';
      out += std::to_string(x);
    }
    out += '\n';
  };
  out += title;
  out += '\n';
  row("  labels:  ", t.labels);
  row("  ascents: ", t.ascents);
  row("  descents:", t.descents);
}

void render_row(std::string& out, const char* name,
                const std::vector<unsigned>& v) {
  out += name;
  for (unsigned x : v) {
    out += ' ';
    out += std::to_string(x);
  }
  out += '\n';
}

}  // namespace

std::string render_trace(const BijectionTrace& t) {
  std::string out;
  render_table(out, "table with leading upstep", t.initial);
  render_table(out, "largest label rotated last", t.rotated);
  render_table(out, "last column dropped", t.truncated);
  render_table(out, "partial sums", t.partial_sums);
  render_row(out, "first entries:", t.first_entries);
  render_row(out, "list lengths: ", t.list_lengths);
  render_row(out, "fill order:   ", t.missing_fill_order);
  return out;
}

}  // namespace noncross
