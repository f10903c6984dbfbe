#include "recurrences.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace noncross {

unsigned Configuration::block_total() const {
  unsigned j = 1;
  for (unsigned ci : c) j += ci;
  return j;
}

ConfigurationStream::ConfigurationStream(unsigned n) : parts_(n) {}

// Prepares cur_ from the freshly fetched partition: b = nonzero entries of
// (parts - 1), still descending, and the c odometer at all ones.
bool ConfigurationStream::load_partition() {
  IntegerPartitionFreq pi;
  if (!parts_.next(pi)) return false;
  cur_.source_partition = pi;
  cur_.b.clear();
  cur_.trailing_zero_count = 0;
  for (unsigned a : pi.parts_descending()) {
    if (a > 1)
      cur_.b.push_back(a - 1);
    else
      ++cur_.trailing_zero_count;
  }
  cur_.c.assign(cur_.b.size(), 1);
  return true;
}

bool ConfigurationStream::next(Configuration& out) {
  if (!have_partition_) {
    if (!load_partition()) return false;
    have_partition_ = true;
    out = cur_;
    return true;
  }
  // Odometer on c, last coordinate fastest, digit i ranging over 1..b_i.
  for (std::size_t i = cur_.c.size(); i-- > 0;) {
    if (cur_.c[i] < cur_.b[i]) {
      ++cur_.c[i];
      for (std::size_t j = i + 1; j < cur_.c.size(); ++j) cur_.c[j] = 1;
      out = cur_;
      return true;
    }
  }
  if (!load_partition()) {
    have_partition_ = false;
    return false;
  }
  out = cur_;
  return true;
}

void CountTable::ensure_snl(unsigned n) {
  if (snl_.empty()) snl_.push_back(1);  // u(0) = 1
  for (unsigned m = static_cast<unsigned>(snl_.size()); m <= n; ++m) {
    BigCount total = 0;
    PartitionStream ps(m);
    IntegerPartitionFreq pi;
    while (ps.next(pi)) {
      BigCount term = factorial(pi.part_count()) * multinomial(pi.freq);
      for (unsigned i = 1; i <= m; ++i)
        if (pi.freq[i - 1] > 0) term *= power(snl_[i - 1], pi.freq[i - 1]);
      total += term;
    }
    snl_.push_back(total);
  }
}

BigCount CountTable::snl(unsigned n) {
  std::lock_guard<std::mutex> lock(mu_);
  ensure_snl(n);
  return snl_[n];
}

void CountTable::ensure_lnl(unsigned n) {
  if (lnl_rows_.empty()) {
    lnl_rows_.push_back({});  // row 0 unused
    lnl_term_counts_.push_back(1);
  }
  for (unsigned m = static_cast<unsigned>(lnl_rows_.size()); m <= n; ++m) {
    std::vector<BigCount> row(m + 1);  // row[j], j = 1..m
    BigCount terms = 0;
    ConfigurationStream cs(m);
    Configuration cfg;
    while (cs.next(cfg)) {
      ++terms;
      const auto& pi = cfg.source_partition;
      BigCount term = factorial(pi.part_count()) * multinomial(pi.freq);
      std::vector<unsigned> blocks_parts;
      blocks_parts.reserve(cfg.c.size() + 1);
      blocks_parts.push_back(1);
      for (unsigned ci : cfg.c) blocks_parts.push_back(ci);
      term *= multinomial(blocks_parts);
      for (std::size_t i = 0; i < cfg.b.size(); ++i)
        term *= lnl_rows_[cfg.b[i]][cfg.c[i]];
      row[cfg.block_total()] += term;
    }
    lnl_rows_.push_back(std::move(row));
    lnl_term_counts_.push_back(terms);
  }
}

BigCount CountTable::lnl(unsigned n) {
  if (n == 0) return 1;
  std::lock_guard<std::mutex> lock(mu_);
  ensure_lnl(n);
  BigCount total = 0;
  for (unsigned j = 1; j <= n; ++j) total += lnl_rows_[n][j];
  return total;
}

BigCount CountTable::lnl_refined(unsigned n, unsigned j) {
  if (n == 0 || j < 1 || j > n) return 0;
  std::lock_guard<std::mutex> lock(mu_);
  ensure_lnl(n);
  return lnl_rows_[n][j];
}

BigCount CountTable::lnl_terms(unsigned n) {
  std::lock_guard<std::mutex> lock(mu_);
  ensure_lnl(n);
  return lnl_term_counts_[n];
}

BigCount snl_count(unsigned n) {
  CountTable t;
  return t.snl(n);
}

BigCount lnl_count(unsigned n) {
  CountTable t;
  return t.lnl(n);
}

BigCount lnl_count_refined(unsigned n, unsigned j) {
  CountTable t;
  return t.lnl_refined(n, j);
}

BigCount snl_count_slow(unsigned n, unsigned bound) {
  unsigned effective = bound == 0 ? 14 : bound;
  if (n > effective)
    throw bound_error(
        "the composition-indexed recurrence sums 2^(n-1) terms and is capped "
        "at n = " +
        std::to_string(effective) + " (requested n = " + std::to_string(n) +
        "); use the partition-indexed count instead");
  std::vector<BigCount> u{1};
  for (unsigned m = 1; m <= n; ++m) {
    BigCount total = 0;
    for (unsigned k = 1; k <= m; ++k) {
      BigCount inner = 0;
      WeakCompositionStream wc(m - k, k);
      WeakComposition comp;
      while (wc.next(comp)) {
        BigCount prod = 1;
        for (unsigned bi : comp.parts) prod *= u[bi];
        inner += prod;
      }
      total += factorial(k) * inner;
    }
    u.push_back(total);
  }
  return u[n];
}

BigCount bell_number(unsigned n) {
  std::vector<BigCount> bell{1};
  for (unsigned m = 1; m <= n; ++m) {
    BigCount next = 0;
    for (unsigned k = 0; k < m; ++k) next += binomial(m - 1, k) * bell[k];
    bell.push_back(next);
  }
  return bell[n];
}

BigCount fubini_number(unsigned n) {
  std::vector<BigCount> fub{1};
  for (unsigned m = 1; m <= n; ++m) {
    BigCount next = 0;
    for (unsigned k = 1; k <= m; ++k) next += binomial(m, k) * fub[m - k];
    fub.push_back(next);
  }
  return fub[n];
}

BigCount closed_count(Family f, unsigned n) {
  if (n == 0) return 1;
  if (!f.noncrossing) {
    if (!f.outer_list && !f.inner_list) return bell_number(n);
    if (!f.outer_list && f.inner_list) {
      BigCount s = 0;
      for (unsigned k = 1; k <= n; ++k) s += lah(n, k);
      return s;
    }
    if (f.outer_list && !f.inner_list) return fubini_number(n);
    // lists of lists: sum over k of n! C(n-1, k-1) = n! 2^(n-1)
    return factorial(n) * power(2, n - 1);
  }
  if (!f.outer_list && !f.inner_list) return catalan(n);
  if (f.outer_list && !f.inner_list) {
    // peak-labeled Dyck n-paths: sum over k of (n+1-k)! N(n,k)
    BigCount s = 0;
    for (unsigned k = 1; k <= n; ++k) s += factorial(n + 1 - k) * narayana(n, k);
    return s;
  }
  if (!f.outer_list && f.inner_list) return snl_count(n);
  return lnl_count(n);
}

namespace {

// 1/(1 - c x^k) truncated at T.
PowerSeries geometric_factor(unsigned order, const BigCount& c, unsigned k) {
  PowerSeries f(order);
  BigCount pw = 1;
  for (unsigned m = 0; m * k <= order; ++m) {
    f[m * k] = pw;
    pw *= c;
  }
  return f;
}

// 1/(1 - x^k)^e truncated at T, by the negative binomial expansion.
PowerSeries negative_binomial_factor(unsigned order, unsigned k, unsigned e) {
  PowerSeries f(order);
  for (unsigned m = 0; m * k <= order; ++m) f[m * k] = binomial(e - 1 + m, m);
  return f;
}

BigCount term_count_direct(unsigned n) {
  BigCount total = 0;
  PartitionStream ps(n);
  IntegerPartitionFreq pi;
  while (ps.next(pi)) {
    BigCount prod = 1;
    for (unsigned a : pi.parts_descending())
      if (a > 1) prod *= a - 1;
    total += prod;
  }
  return total;
}

}  // namespace

PowerSeries term_count_gf(unsigned order) {
  PowerSeries acc = geometric_factor(order, 1, 1);
  for (unsigned k = 2; k <= order; ++k)
    acc = series_mul(acc, geometric_factor(order, k - 1, k));
  return acc;
}

PowerSeries term_count_refined_gf(unsigned order) {
  PowerSeries acc = geometric_factor(order, 1, 1);
  for (unsigned k = 2; k <= order; ++k)
    acc = series_mul(acc, negative_binomial_factor(order, k, k - 1));
  return acc;
}

BigCount term_count(unsigned n) {
  BigCount direct = term_count_direct(n);
  BigCount from_gf = term_count_gf(n)[n];
  if (direct != from_gf)
    throw std::logic_error("term count mismatch at n = " + std::to_string(n) +
                           ": direct sum " + direct.get_str() +
                           " vs generating function " + from_gf.get_str());
  return direct;
}

BigCount term_count_refined(unsigned n) { return term_count_refined_gf(n)[n]; }

}  // namespace noncross
