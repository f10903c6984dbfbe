#include "transform.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"
#include "family_enum.hpp"
#include "power_series.hpp"

namespace noncross {

Sequence ncp_transform(const Sequence& a) {
  if (a.terms.empty() || a.terms[0] != 1)
    throw std::invalid_argument("transform input needs leading term a_0 = 1");
  const unsigned T = static_cast<unsigned>(a.terms.size()) - 1;
  Sequence b;
  b.terms.assign(T + 1, 0);
  b.terms[0] = 1;
  // pw[k][m] = [x^m] B^k, filled along anti-diagonals k + m = n just before
  // b_n is produced; entry (k, m) only consumes b_0..b_m with m <= n - 1.
  std::vector<std::vector<BigCount>> pw(T + 1, std::vector<BigCount>(T + 1));
  pw[0][0] = 1;
  for (unsigned n = 1; n <= T; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const unsigned m = n - k;
      BigCount s = 0;
      for (unsigned i = 0; i <= m; ++i)
        if (b.terms[i] != 0 && pw[k - 1][m - i] != 0)
          s += b.terms[i] * pw[k - 1][m - i];
      pw[k][m] = s;
    }
    BigCount bn = 0;
    for (unsigned k = 1; k <= n; ++k) bn += a.terms[k] * pw[k][n - k];
    b.terms[n] = bn;
  }
  return b;
}

Sequence ncp_inverse(const Sequence& b) {
  if (b.terms.empty() || b.terms[0] != 1)
    throw std::invalid_argument("transform input needs leading term b_0 = 1");
  const unsigned T = static_cast<unsigned>(b.terms.size()) - 1;
  // x B(x) is normalized (constant 0, linear 1), so its reversion R is
  // integral, R/x has unit constant term, and A = x / R = 1 / (R / x).
  PowerSeries xb(T + 1);
  for (unsigned i = 0; i <= T; ++i) xb[i + 1] = b.terms[i];
  PowerSeries rev = series_reversion(xb);
  PowerSeries rev_over_x(T);
  for (unsigned i = 0; i <= T; ++i) rev_over_x[i] = rev[i + 1];
  PowerSeries a = series_reciprocal(rev_over_x);
  Sequence out;
  out.terms = a.coeffs();
  return out;
}

BigCount ncp_oracle(const Sequence& weights, unsigned k, unsigned bound) {
  unsigned effective = bound == 0 ? 12 : bound;
  if (k > effective)
    throw bound_error(
        "the combinatorial oracle enumerates all noncrossing partitions of "
        "[k] and is capped at k = " +
        std::to_string(effective) + " (requested k = " + std::to_string(k) +
        "); use the transform itself beyond that");
  if (k == 0) return 1;
  if (weights.terms.size() < k + 1)
    throw std::invalid_argument("oracle needs weights up to index k");
  FamilyStream s(Family{false, false, true}, k);
  BlockPartition p;
  BigCount total = 0;
  while (s.next(p)) {
    BigCount prod = 1;
    for (const auto& block : p.blocks) prod *= weights.terms[block.size()];
    total += prod;
  }
  return total;
}

bool avoids_pattern_321(const std::vector<unsigned>& values) {
  const std::size_t m = values.size();
  for (std::size_t j = 1; j + 1 < m; ++j) {
    unsigned prefix_max = 0;
    for (std::size_t i = 0; i < j; ++i) prefix_max = std::max(prefix_max, values[i]);
    unsigned suffix_min = values[j + 1];
    for (std::size_t l = j + 1; l < m; ++l) suffix_min = std::min(suffix_min, values[l]);
    if (prefix_max > values[j] && values[j] > suffix_min) return false;
  }
  return true;
}

namespace {

Sequence gen_ones(unsigned T) {
  Sequence s;
  s.terms.assign(T + 1, 1);
  return s;
}

Sequence gen_catalan(unsigned T) {
  Sequence s;
  for (unsigned k = 0; k <= T; ++k) s.terms.push_back(catalan(k));
  return s;
}

Sequence gen_powers2(unsigned T) {
  Sequence s;
  for (unsigned k = 0; k <= T; ++k) s.terms.push_back(power(2, k));
  return s;
}

Sequence gen_powers2_shift(unsigned T) {
  // a_0 = 1, a_k = 2^(k-1)
  Sequence s;
  s.terms.push_back(1);
  for (unsigned k = 1; k <= T; ++k) s.terms.push_back(power(2, k - 1));
  return s;
}

Sequence gen_half_central_binomial(unsigned T) {
  // a_0 = 1, a_k = C(2k, k) / 2
  Sequence s;
  s.terms.push_back(1);
  for (unsigned k = 1; k <= T; ++k) {
    BigCount v = binomial(2ul * k, k);
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2);
    s.terms.push_back(v);
  }
  return s;
}

Sequence gen_fibonacci_shift(unsigned T) {
  // a_k = F_{k-1} under the convention F_1 = F_2 = 1 (so F_0 = 0), with the
  // mandatory a_0 = 1.
  Sequence s;
  s.terms.push_back(1);
  BigCount prev = 0, cur = 1;  // F_0, F_1
  for (unsigned k = 1; k <= T; ++k) {
    s.terms.push_back(prev);
    BigCount nxt = prev + cur;
    prev = cur;
    cur = nxt;
  }
  return s;
}

BigCount little_schroeder(unsigned n) {
  // s_0 = s_1 = 1, (n+1) s_n = (6n-3) s_{n-1} - (n-2) s_{n-2}; the division
  // is exact.
  if (n <= 1) return 1;
  BigCount a = 1, b = 1;  // s_0, s_1
  for (unsigned m = 2; m <= n; ++m) {
    BigCount c = BigCount(6 * m - 3) * b - BigCount(m - 2) * a;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), m + 1);
    a = b;
    b = c;
  }
  return b;
}

Sequence gen_little_schroeder(unsigned T) {
  Sequence s;
  for (unsigned k = 0; k <= T; ++k) s.terms.push_back(little_schroeder(k));
  return s;
}

Sequence gen_catalan_shift(unsigned T) {
  // a_0 = 1, a_k = C_{k-1}
  Sequence s;
  s.terms.push_back(1);
  for (unsigned k = 1; k <= T; ++k) s.terms.push_back(catalan(k - 1));
  return s;
}

Sequence expected_ones(unsigned T) { return gen_catalan(T); }

Sequence expected_powers2(unsigned T) {
  // b_k = 2^k C(2k, k) / (k+1) = 2^k C_k
  Sequence s;
  for (unsigned k = 0; k <= T; ++k) s.terms.push_back(power(2, k) * catalan(k));
  return s;
}

Sequence expected_catalan(unsigned T) {
  // b_k = C(3k, k) / (2k+1)
  Sequence s;
  for (unsigned k = 0; k <= T; ++k) {
    BigCount v = binomial(3ul * k, k);
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2 * k + 1);
    s.terms.push_back(v);
  }
  return s;
}

Sequence expected_half_central_binomial(unsigned T) {
  // b_0 = 1, b_k = 2^(k-1) C_k
  Sequence s;
  s.terms.push_back(1);
  for (unsigned k = 1; k <= T; ++k) s.terms.push_back(power(2, k - 1) * catalan(k));
  return s;
}

const std::vector<TableRow>& rows() {
  static const std::vector<TableRow> r = {
      {"ones", true, gen_ones, expected_ones},
      {"powers2", true, gen_powers2, expected_powers2},
      {"catalan", true, gen_catalan, expected_catalan},
      {"half_central_binomial", true, gen_half_central_binomial,
       expected_half_central_binomial},
      {"fibonacci_shift", false, gen_fibonacci_shift, nullptr},
      {"powers2_shift", false, gen_powers2_shift, nullptr},
      {"little_schroeder", false, gen_little_schroeder, nullptr},
      {"catalan_shift", false, gen_catalan_shift, nullptr},
  };
  return r;
}

}  // namespace

const std::vector<TableRow>& table_rows() { return rows(); }

const TableRow& table_row(const std::string& name) {
  for (const auto& r : rows())
    if (r.name == name) return r;
  throw std::invalid_argument("unknown table row: " + name);
}

ParsedSequence parse_sequence_text(std::string_view text) {
  // Tokenize into lines of integer tokens.
  std::vector<std::vector<std::pair<BigCount, std::size_t>>> lines;
  lines.emplace_back();
  bool saw_comma = false;
  std::size_t i = 0;
  const std::size_t len = text.size();
  while (i < len) {
    char ch = text[i];
    if (ch == '\n') {
      if (!lines.back().empty()) lines.emplace_back();
      ++i;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
    } else if (ch == ',') {
      saw_comma = true;
      ++i;
    } else if (ch == '#') {
      while (i < len && text[i] != '\n') ++i;  // comment to end of line
    } else if (ch == '-' || (ch >= '0' && ch <= '9')) {
      std::size_t start = i;
      std::string digits;
      if (ch == '-') {
        digits += '-';
        ++i;
      }
      if (i >= len || text[i] < '0' || text[i] > '9')
        throw parse_error("expected digits after '-'", i);
      while (i < len && text[i] >= '0' && text[i] <= '9') digits += text[i++];
      lines.back().emplace_back(BigCount(digits), start);
    } else {
      throw parse_error("unexpected character in sequence", i);
    }
  }
  if (lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw parse_error("empty sequence", 0);

  ParsedSequence out;
  if (lines.size() == 1) {
    out.style = saw_comma ? SequenceStyle::CommaLine : SequenceStyle::SpaceLine;
    if (lines[0].size() == 1 && !saw_comma) out.style = SequenceStyle::Lines;
    for (auto& [v, pos] : lines[0]) out.seq.terms.push_back(v);
    return out;
  }
  const bool pairs =
      std::all_of(lines.begin(), lines.end(),
                  [](const auto& l) { return l.size() == 2; });
  if (pairs && lines.size() >= 2) {
    out.style = SequenceStyle::IndexPairs;
    BigCount first = lines[0][0].first;
    if (first != 0 && first != 1)
      throw parse_error("index-value input must start at index 0 or 1",
                        lines[0][0].second);
    out.first_index = static_cast<unsigned>(first.get_ui());
    if (out.first_index == 1) out.seq.terms.push_back(1);  // implicit a_0
    BigCount expect = first;
    for (const auto& line : lines) {
      if (line[0].first != expect)
        throw parse_error("indices must be consecutive (expected " +
                              expect.get_str() + ")",
                          line[0].second);
      out.seq.terms.push_back(line[1].first);
      expect += 1;
    }
    return out;
  }
  // One value per line.
  out.style = SequenceStyle::Lines;
  for (const auto& line : lines) {
    if (line.size() != 1)
      throw parse_error("expected one value per line", line.back().second);
    out.seq.terms.push_back(line[0].first);
  }
  return out;
}

std::string format_sequence(const Sequence& seq, SequenceStyle style,
                            unsigned first_index) {
  std::string out;
  switch (style) {
    case SequenceStyle::CommaLine:
    case SequenceStyle::SpaceLine: {
      const char* sep = style == SequenceStyle::CommaLine ? "," : " ";
      for (std::size_t i = 0; i < seq.terms.size(); ++i) {
        if (i) out += sep;
        out += seq.terms[i].get_str();
      }
      out += '\n';
      break;
    }
    case SequenceStyle::Lines:
      for (const auto& t : seq.terms) {
        out += t.get_str();
        out += '\n';
      }
      break;
    case SequenceStyle::IndexPairs:
      for (std::size_t i = first_index; i < seq.terms.size(); ++i) {
        out += std::to_string(i);
        out += ' ';
        out += seq.terms[i].get_str();
        out += '\n';
      }
      break;
  }
  return out;
}

}  // namespace noncross
