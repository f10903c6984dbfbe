#include "verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "bijection.hpp"
#include "bigcount.hpp"
#include "block_partition.hpp"
#include "dyck.hpp"
#include "family_enum.hpp"
#include "recurrences.hpp"
#include "transform.hpp"

namespace noncross {

namespace {

std::string join(const std::vector<BigCount>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s;
}

struct Reporter {
  unsigned max_n = 0;
  std::vector<CheckResult> results;

  unsigned cap(unsigned deflt) const {
    return max_n == 0 ? deflt : std::min(deflt, max_n);
  }
  void check(const std::string& name, bool ok, const std::string& detail) {
    results.push_back({name, ok, detail});
  }
};

Sequence random_sequence(std::mt19937& rng, unsigned T) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Sequence s;
  s.terms.push_back(1);
  for (unsigned i = 1; i <= T; ++i) s.terms.push_back(dist(rng));
  return s;
}

void suite_counts(Reporter& r) {
  {
    const std::vector<BigCount> want = {1, 1, 3, 13, 69};
    std::vector<BigCount> got;
    for (unsigned n = 0; n <= 4; ++n) got.push_back(snl_count(n));
    r.check("snl terms 0..4", got == want,
            join(got) + (got == want ? "" : " expected " + join(want)));
  }
  {
    const unsigned N = r.cap(12);
    bool ok = true;
    std::string detail = "both recurrences agree for n <= " + std::to_string(N);
    CountTable t;
    for (unsigned n = 0; n <= N; ++n) {
      BigCount fast = t.snl(n), slow = snl_count_slow(n);
      if (fast != slow) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": " + fast.get_str() + " vs " +
                 slow.get_str();
        break;
      }
    }
    r.check("snl partition recurrence = composition recurrence", ok, detail);
  }
  {
    const unsigned N = r.cap(9);
    bool ok = true;
    std::string detail = "recurrence matches enumeration for n <= " + std::to_string(N);
    CountTable t;
    for (unsigned n = 1; n <= N; ++n) {
      BigCount brute = count_family_bruteforce(parse_family("sl-nc"), n, n);
      if (t.snl(n) != brute) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": " + t.snl(n).get_str() + " vs " +
                 brute.get_str();
        break;
      }
    }
    r.check("snl = brute force", ok, detail);
  }
  {
    const std::vector<BigCount> want = {1,    4,     24,     184,
                                        1680, 17592, 206472, 2674752};
    const unsigned N = r.cap(8);
    std::vector<BigCount> got, expect;
    CountTable t;
    for (unsigned n = 1; n <= N; ++n) {
      got.push_back(t.lnl(n));
      expect.push_back(want[n - 1]);
    }
    r.check("lnl published terms", got == expect,
            join(got) + (got == expect ? "" : " expected " + join(expect)));
  }
  {
    const unsigned N = r.cap(8);
    bool ok = true;
    std::string detail = "recurrence matches enumeration for n <= " + std::to_string(N);
    CountTable t;
    for (unsigned n = 1; n <= N; ++n) {
      BigCount brute = count_family_bruteforce(parse_family("ll-nc"), n, n);
      if (t.lnl(n) != brute) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": " + t.lnl(n).get_str() + " vs " +
                 brute.get_str();
        break;
      }
    }
    r.check("lnl = brute force", ok, detail);
  }
  {
    const unsigned N = r.cap(10);
    bool ok = true;
    std::string detail = "row sums match for n <= " + std::to_string(N);
    CountTable t;
    for (unsigned n = 1; n <= N; ++n) {
      BigCount sum = 0;
      for (unsigned j = 1; j <= n; ++j) sum += t.lnl_refined(n, j);
      if (sum != t.lnl(n)) {
        ok = false;
        detail = "n=" + std::to_string(n);
        break;
      }
    }
    r.check("lnl refined rows sum to totals", ok, detail);
  }
  {
    const unsigned N = r.cap(8);
    bool ok = true;
    std::vector<BigCount> counts;
    std::string detail;
    for (unsigned n = 1; n <= N; ++n) {
      BigCount a = count_family_bruteforce(parse_family("ls-nc"), n, n);
      BigCount b = count_family_bruteforce(parse_family("sl"), n, n);
      counts.push_back(a);
      if (a != b) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": " + a.get_str() + " vs " +
                 b.get_str();
        break;
      }
    }
    if (ok) detail = join(counts);
    r.check("lists of noncrossing sets = sets of lists (brute force)", ok, detail);
  }
  {
    const unsigned N = r.cap(30);
    bool ok = true;
    std::string detail = "identity holds for n <= " + std::to_string(N);
    for (unsigned n = 1; n <= N; ++n) {
      BigCount lhs = 0, rhs = 0;
      for (unsigned k = 1; k <= n; ++k) {
        lhs += factorial(n + 1 - k) * narayana(n, k);
        rhs += lah(n, k);
      }
      if (lhs != rhs) {
        ok = false;
        detail = "n=" + std::to_string(n);
        break;
      }
    }
    r.check("sum (n+1-k)! N(n,k) = sum L(n,k)", ok, detail);
  }
  {
    const unsigned N = r.cap(8);
    bool ok = true;
    std::string detail = "all eight families match closed counts for n <= " +
                         std::to_string(N);
    for (const char* code :
         {"ss", "sl", "ls", "ll", "ss-nc", "sl-nc", "ls-nc", "ll-nc"}) {
      Family f = parse_family(code);
      for (unsigned n = 1; n <= N && ok; ++n) {
        BigCount brute = count_family_bruteforce(f, n, n);
        BigCount closed = closed_count(f, n);
        if (brute != closed) {
          ok = false;
          detail = std::string(code) + " n=" + std::to_string(n) + ": " +
                   brute.get_str() + " vs " + closed.get_str();
        }
      }
      if (!ok) break;
    }
    r.check("brute force = closed counts, all families", ok, detail);
  }
  {
    bool ok = true;
    std::string detail = "crossing needs four elements";
    for (const char* code : {"ss", "sl", "ls", "ll"}) {
      Family plain = parse_family(code);
      Family restricted = plain;
      restricted.noncrossing = true;
      for (unsigned n = 1; n <= r.cap(3) && ok; ++n) {
        if (count_family_bruteforce(plain, n, n) !=
            count_family_bruteforce(restricted, n, n)) {
          ok = false;
          detail = std::string(code) + " n=" + std::to_string(n);
        }
      }
      if (!ok) break;
    }
    r.check("restricted = unrestricted for n <= 3", ok, detail);
  }
  if (r.cap(4) >= 4) {
    BigCount plain = count_family_bruteforce(parse_family("ll"), 4, 4);
    BigCount restricted = count_family_bruteforce(parse_family("ll-nc"), 4, 4);
    BigCount gap = plain - restricted;
    r.check("lists-of-lists crossing gap at n = 4", gap == 8,
            plain.get_str() + " - " + restricted.get_str() + " = " + gap.get_str());
  }
}

void suite_bijection(Reporter& r) {
  {
    PeakLabeledDyckPath p{parse_dyck("UUUDUUDDDUUDDDUUDD"), {3, 1, 4, 2}};
    BlockPartition image = bijection_forward(p);
    std::string got = format_partition(image);
    bool ok = got == "1|3,6,8|4|5,2|7|9";
    PeakLabeledDyckPath back = bijection_inverse(image);
    ok = ok && back == p;
    r.check("worked example roundtrip", ok, got);
  }
  {
    const unsigned N = r.cap(7);
    bool ok = true;
    std::string detail;
    unsigned long objects = 0;
    for (unsigned n = 1; n <= N && ok; ++n) {
      std::set<std::string> images;
      std::map<unsigned, unsigned long> by_peaks;
      PeakLabeledStream s(n);
      PeakLabeledDyckPath p;
      while (s.next(p)) {
        ++objects;
        BlockPartition q = bijection_forward(p);
        if (q.block_count() != n + 1 - p.path.peaks()) {
          ok = false;
          detail = "block count law fails at n=" + std::to_string(n);
          break;
        }
        if (!images.insert(format_partition(q)).second) {
          ok = false;
          detail = "duplicate image at n=" + std::to_string(n);
          break;
        }
        ++by_peaks[p.path.peaks()];
        PeakLabeledDyckPath back = bijection_inverse(q);
        if (back != p) {
          ok = false;
          detail = "inverse(forward) mismatch at n=" + std::to_string(n);
          break;
        }
      }
      if (!ok) break;
      // Images with n+1-k peaks must number L(n,k).
      for (auto [peaks, cnt] : by_peaks) {
        if (BigCount(cnt) != lah(n, n + 1 - peaks)) {
          ok = false;
          detail = "image count at n=" + std::to_string(n) +
                   ", peaks=" + std::to_string(peaks);
        }
      }
    }
    if (ok)
      detail = std::to_string(objects) + " objects, inverse(forward) = id, "
               "image counts are Lah numbers";
    r.check("forward bijection exhaustive to n = " + std::to_string(N), ok, detail);
  }
  {
    const unsigned N = r.cap(7);
    bool ok = true;
    std::string detail;
    unsigned long objects = 0;
    for (unsigned n = 1; n <= N && ok; ++n) {
      FamilyStream s(parse_family("sl"), n);
      BlockPartition q;
      while (s.next(q)) {
        ++objects;
        PeakLabeledDyckPath p = bijection_inverse(q);
        if (bijection_forward(p) != q) {
          ok = false;
          detail = "forward(inverse) mismatch at n=" + std::to_string(n) +
                   " for " + format_partition(q);
          break;
        }
      }
    }
    if (ok)
      detail = std::to_string(objects) +
               " sets of lists, forward(inverse) = id, exactly one rotation "
               "validated in every inverse";
    r.check("inverse bijection exhaustive to n = " + std::to_string(N), ok, detail);
  }
  {
    const unsigned N = r.cap(5);
    std::vector<BigCount> counts;
    bool ok = true;
    std::string detail;
    for (unsigned n = 1; n <= N; ++n) {
      PeakLabeledStream s(n);
      PeakLabeledDyckPath p;
      unsigned long c = 0;
      while (s.next(p)) ++c;
      counts.push_back(c);
      if (BigCount(c) != closed_count(parse_family("sl"), n)) {
        ok = false;
        detail = "n=" + std::to_string(n);
        break;
      }
    }
    if (ok) detail = "object counts " + join(counts);
    r.check("peak-labeled paths are equinumerous with sets of lists", ok, detail);
  }
  {
    const unsigned N = r.cap(8);
    bool ok = true;
    std::string detail = "roundtrip and peak counts hold for n <= " + std::to_string(N);
    for (unsigned n = 1; n <= N && ok; ++n) {
      std::map<unsigned, unsigned long> peaks;
      DyckPathStream s(n);
      DyckPath d;
      while (s.next(d)) {
        BlockPartition q = prodinger_to_partition(d);
        if (!is_noncrossing(q)) {
          ok = false;
          detail = "image crosses at n=" + std::to_string(n);
          break;
        }
        if (prodinger_from_partition(q) != d) {
          ok = false;
          detail = "roundtrip fails at n=" + std::to_string(n);
          break;
        }
        ++peaks[d.peaks()];
      }
      for (auto [k, cnt] : peaks)
        if (BigCount(cnt) != narayana(n, k)) {
          ok = false;
          detail = "peak distribution at n=" + std::to_string(n);
        }
    }
    r.check("path-partition correspondence", ok, detail);
  }
}

void suite_transform(Reporter& r) {
  {
    const unsigned T = r.cap(8);
    bool ok = true;
    std::string detail = "all formula rows match through k = " + std::to_string(T);
    for (const auto& row : table_rows()) {
      if (!row.has_expected) continue;
      Sequence got = ncp_transform(row.input(T));
      Sequence want = row.expected(T);
      if (got != want) {
        ok = false;
        detail = row.name + ": " + join(got.terms) + " expected " + join(want.terms);
        break;
      }
    }
    r.check("table rows with closed outputs", ok, detail);
  }
  {
    const unsigned T = r.cap(9);
    bool ok = true;
    std::string detail = "oracle agrees on every row through k = " + std::to_string(T);
    for (const auto& row : table_rows()) {
      Sequence in = row.input(T);
      Sequence out = ncp_transform(in);
      for (unsigned k = 0; k <= T && ok; ++k)
        if (ncp_oracle(in, k) != out.terms[k]) {
          ok = false;
          detail = row.name + " at k = " + std::to_string(k);
        }
      if (!ok) break;
    }
    r.check("combinatorial oracle = transform on table rows", ok, detail);
  }
  {
    const unsigned T = r.cap(9);
    std::mt19937 rng(20240915);
    bool ok = true;
    std::string detail = "oracle agrees on 100 random sequences through k = " +
                         std::to_string(T);
    for (unsigned trial = 0; trial < 100 && ok; ++trial) {
      Sequence in = random_sequence(rng, T);
      Sequence out = ncp_transform(in);
      for (unsigned k = 0; k <= T && ok; ++k)
        if (ncp_oracle(in, k) != out.terms[k]) {
          ok = false;
          detail = "trial " + std::to_string(trial) + " at k = " + std::to_string(k);
        }
    }
    r.check("combinatorial oracle = transform on random sequences", ok, detail);
  }
  {
    const unsigned T = std::max(r.cap(20), 1u);
    std::mt19937 rng(731);
    bool ok = true;
    std::string detail = "inverse(transform) = id on 100 random sequences, T = " +
                         std::to_string(T);
    for (unsigned trial = 0; trial < 100 && ok; ++trial) {
      Sequence a = random_sequence(rng, T);
      Sequence b = ncp_transform(a);
      if (b.terms[1] != a.terms[1]) {
        ok = false;
        detail = "b_1 != a_1 in trial " + std::to_string(trial);
        break;
      }
      if (ncp_inverse(b) != a) {
        ok = false;
        detail = "trial " + std::to_string(trial);
      }
    }
    r.check("transform roundtrip on random sequences", ok, detail);
  }
  {
    const unsigned T = r.cap(12);
    Sequence factorials;
    for (unsigned k = 0; k <= T; ++k) factorials.terms.push_back(factorial(k));
    Sequence got = ncp_transform(factorials);
    std::vector<BigCount> want;
    CountTable t;
    for (unsigned k = 0; k <= T; ++k) want.push_back(t.snl(k));
    r.check("factorial weights reproduce the snl counts", got.terms == want,
            join(got.terms));
  }
  {
    const unsigned K = r.cap(6);
    bool ok = true;
    std::string detail;
    std::vector<BigCount> counts;
    for (unsigned k = 1; k <= K && ok; ++k) {
      FamilyStream s(parse_family("sl-nc"), k);
      BlockPartition p;
      BigCount count = 0;
      while (s.next(p)) {
        bool good = true;
        for (const auto& block : p.blocks)
          if (!avoids_pattern_321(block)) {
            good = false;
            break;
          }
        if (good) count += 1;
      }
      counts.push_back(count);
      BigCount want = binomial(3ul * k, k);
      mpz_divexact_ui(want.get_mpz_t(), want.get_mpz_t(), 2 * k + 1);
      if (count != want) {
        ok = false;
        detail = "k=" + std::to_string(k) + ": " + count.get_str() + " vs " +
                 want.get_str();
      }
    }
    if (ok) detail = join(counts) + " = C(3k,k)/(2k+1)";
    r.check("noncrossing 321-avoiding lists", ok, detail);
  }
}

void suite_termcounts(Reporter& r) {
  {
    const std::vector<BigCount> want = {1, 1, 2, 4, 8, 14, 27, 45, 82};
    const unsigned N = r.cap(8);
    std::vector<BigCount> got, expect;
    for (unsigned n = 0; n <= N; ++n) {
      got.push_back(term_count(n));  // dual-checked internally
      expect.push_back(want[n]);
    }
    r.check("term counts", got == expect,
            join(got) + (got == expect ? "" : " expected " + join(expect)));
  }
  {
    const std::vector<BigCount> want = {1, 1, 2, 4, 8, 14, 26, 44, 77};
    const unsigned N = r.cap(8);
    std::vector<BigCount> got, expect;
    for (unsigned n = 0; n <= N; ++n) {
      got.push_back(term_count_refined(n));
      expect.push_back(want[n]);
    }
    r.check("collected term counts", got == expect,
            join(got) + (got == expect ? "" : " expected " + join(expect)));
  }
  {
    const unsigned N = r.cap(12);
    bool ok = true;
    std::string detail = "configuration streams have term_count(n) entries for n <= " +
                         std::to_string(N);
    CountTable t;
    for (unsigned n = 1; n <= N; ++n) {
      if (t.lnl_terms(n) != term_count(n)) {
        ok = false;
        detail = "n=" + std::to_string(n);
        break;
      }
    }
    r.check("summands generated = term count", ok, detail);
  }
  {
    const unsigned T = r.cap(10);
    CountTable t;
    PowerSeries u(T);
    for (unsigned n = 0; n <= T; ++n) u[n] = t.snl(n);
    PowerSeries xu = series_shift_up(u);
    PowerSeries acc(T), pw(T);
    pw[0] = 1;
    for (unsigned k = 0; k <= T; ++k) {
      acc = series_add(acc, series_scale(pw, factorial(k)));
      pw = series_mul(pw, xu);
    }
    r.check("snl series is the fixed point of sum k! (x U)^k", acc == u,
            join(u.coeffs()));
  }
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, unsigned max_n) {
  Reporter r;
  r.max_n = max_n;
  if (suite == "counts") {
    suite_counts(r);
  } else if (suite == "bijection") {
    suite_bijection(r);
  } else if (suite == "transform") {
    suite_transform(r);
  } else if (suite == "termcounts") {
    suite_termcounts(r);
  } else if (suite == "all") {
    suite_counts(r);
    suite_bijection(r);
    suite_transform(r);
    suite_termcounts(r);
  } else {
    throw std::invalid_argument(
        "unknown suite; expected counts, bijection, transform, termcounts or all");
  }
  return std::move(r.results);
}

std::string render_report(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& c : results) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.name;
    if (!c.detail.empty()) {
      out += ": ";
      out += c.detail;
    }
    out += '\n';
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& c : results)
    if (!c.pass) return false;
  return true;
}

}  // namespace noncross
