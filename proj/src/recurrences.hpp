#pragma once

#include <mutex>
#include <vector>

#include "bigcount.hpp"
#include "family_enum.hpp"
#include "int_partitions.hpp"
#include "power_series.hpp"

namespace noncross {

// One summand index for the lists-of-noncrossing-lists recurrence: the
// nonzero entries b_1 >= ... >= b_r of (parts of pi) - 1 together with a
// choice 1 <= c_i <= b_i of how many blocks each gap interval holds. The
// partition's total block count is j = 1 + sum c_i.
struct Configuration {
  std::vector<unsigned> b;
  std::vector<unsigned> c;
  unsigned trailing_zero_count = 0;
  IntegerPartitionFreq source_partition;

  unsigned block_total() const;  // j

  bool operator==(const Configuration&) const = default;
};

// All configurations for ground-set size n: partitions of n in the
// PartitionStream order, and for each the c-vectors in odometer order with
// the last coordinate fastest. The stream length equals term_count(n).
class ConfigurationStream {
 public:
  explicit ConfigurationStream(unsigned n);
  bool next(Configuration& out);

 private:
  bool load_partition();

  PartitionStream parts_;
  Configuration cur_;
  bool have_partition_ = false;
  bool fresh_ = false;
};

// Memoized count tables for the two recurrence-driven families. Rows are
// appended under a lock, so concurrent callers see settled values only;
// results do not depend on the interleaving.
class CountTable {
 public:
  // Partitions of [n] into a set of noncrossing lists, by the
  // partition-indexed recurrence: each integer partition 1^{p_1}..n^{p_n}
  // of n contributes k! * multinomial(p) * prod u(i-1)^{p_i} with k = sum p_i.
  // Note the index shift: the multiplicity of part i multiplies u(i-1).
  BigCount snl(unsigned n);

  // Partitions of [n] into a list of noncrossing lists, and the refinement
  // by block count j (0 outside 1 <= j <= n).
  BigCount lnl(unsigned n);
  BigCount lnl_refined(unsigned n, unsigned j);

  // Number of configuration summands generated while filling row n of the
  // refined table; equals term_count(n).
  BigCount lnl_terms(unsigned n);

 private:
  void ensure_snl(unsigned n);
  void ensure_lnl(unsigned n);

  std::mutex mu_;
  std::vector<BigCount> snl_;
  std::vector<std::vector<BigCount>> lnl_rows_;  // row n: u(n,1)..u(n,n)
  std::vector<BigCount> lnl_term_counts_;
};

// Pure convenience wrappers over a fresh table.
BigCount snl_count(unsigned n);
BigCount lnl_count(unsigned n);
BigCount lnl_count_refined(unsigned n, unsigned j);

// The composition-indexed recurrence for the same snl counts: u(n, k) = k! *
// sum over weak compositions (b_1..b_k) of n-k of prod u(b_i). The sum has
// 2^{n-1} terms, so n is capped (default 14; bound == 0 uses the default).
// Deliberately independent of the partition-indexed path.
BigCount snl_count_slow(unsigned n, unsigned bound = 0);

// Bell numbers (set partitions) and Fubini numbers (ordered set partitions)
// by their textbook binomial recurrences.
BigCount bell_number(unsigned n);
BigCount fubini_number(unsigned n);

// Cardinality of any of the eight families: closed forms for ss, sl, ls, ll,
// ss-nc and ls-nc; sl-nc and ll-nc delegate to their recurrences.
BigCount closed_count(Family f, unsigned n);

// Number of terms in the refined recurrence's sum for u(n), computed two
// independent ways that must agree: the coefficient of x^n in the product
// generating function and the direct sum over partitions of the products of
// nonzero entries of pi - 1. Disagreement throws logic_error.
BigCount term_count(unsigned n);

// Generating function of term_count through x^T:
// 1/(1-x) * prod_{k>=2} 1/(1 - (k-1) x^k).
PowerSeries term_count_gf(unsigned order);

// Term count after collecting equal factors; coefficient of x^n in
// 1/(1-x) * prod_{k>=2} 1/(1-x^k)^{k-1}.
BigCount term_count_refined(unsigned n);
PowerSeries term_count_refined_gf(unsigned order);

}  // namespace noncross
