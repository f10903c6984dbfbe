#include "power_series.hpp"

#include <stdexcept>

namespace noncross {

namespace {

void require_same_order(const PowerSeries& f, const PowerSeries& g) {
  if (f.order() != g.order())
    throw std::invalid_argument("power series truncation orders differ: " +
                                std::to_string(f.order()) + " vs " +
                                std::to_string(g.order()));
}

}  // namespace

PowerSeries::PowerSeries(unsigned order, std::vector<BigCount> coeffs)
    : c_(std::move(coeffs)) {
  if (c_.size() > order + 1)
    throw std::invalid_argument("more coefficients than the order admits");
  c_.resize(order + 1);
}

PowerSeries series_add(const PowerSeries& f, const PowerSeries& g) {
  require_same_order(f, g);
  PowerSeries r(f.order());
  for (unsigned i = 0; i <= f.order(); ++i) r[i] = f[i] + g[i];
  return r;
}

PowerSeries series_scale(const PowerSeries& f, const BigCount& c) {
  PowerSeries r(f.order());
  for (unsigned i = 0; i <= f.order(); ++i) r[i] = f[i] * c;
  return r;
}

PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g) {
  require_same_order(f, g);
  const unsigned T = f.order();
  PowerSeries r(T);
  for (unsigned i = 0; i <= T; ++i) {
    if (f[i] == 0) continue;
    for (unsigned j = 0; i + j <= T; ++j) {
      if (g[j] == 0) continue;
      r[i + j] += f[i] * g[j];
    }
  }
  return r;
}

PowerSeries series_shift_up(const PowerSeries& f) {
  PowerSeries r(f.order());
  for (unsigned i = 1; i <= f.order(); ++i) r[i] = f[i - 1];
  return r;
}

PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g) {
  require_same_order(f, g);
  if (g[0] != 0)
    throw std::invalid_argument("composition needs a zero constant term");
  const unsigned T = f.order();
  // Horner evaluation: r = (...(c_T g + c_{T-1}) g + ...) g + c_0.
  PowerSeries r(T);
  r[0] = f[T];
  for (unsigned i = T; i-- > 0;) {
    r = series_mul(r, g);
    r[0] += f[i];
  }
  return r;
}

PowerSeries series_reciprocal(const PowerSeries& f) {
  if (f[0] != 1)
    throw std::invalid_argument("reciprocal needs constant term 1");
  const unsigned T = f.order();
  PowerSeries g(T);
  g[0] = 1;
  for (unsigned m = 1; m <= T; ++m) {
    BigCount s = 0;
    for (unsigned i = 1; i <= m; ++i) s += f[i] * g[m - i];
    g[m] = -s;
  }
  return g;
}

PowerSeries series_reversion(const PowerSeries& f) {
  const unsigned T = f.order();
  if (T < 1 || f[0] != 0 || f[1] != 1)
    throw std::invalid_argument(
        "reversion is restricted to series with c_0 = 0 and c_1 = 1");
  // pw[j][m] = [x^m] g^j, filled column by column: entries of column m with
  // j >= 2 only involve g_1..g_{m-1}, so g_m can be solved from
  // 0 = [x^m] f(g) = g_m + sum_{j>=2} f_j [x^m] g^j.
  PowerSeries g(T);
  if (T >= 1) g[1] = 1;
  std::vector<std::vector<BigCount>> pw(T + 1, std::vector<BigCount>(T + 1));
  pw[1][1] = 1;
  for (unsigned m = 2; m <= T; ++m) {
    BigCount s = 0;
    for (unsigned j = 2; j <= m; ++j) {
      BigCount q = 0;
      for (unsigned i = 1; i + j - 1 <= m; ++i) q += g[i] * pw[j - 1][m - i];
      pw[j][m] = q;
      s += f[j] * q;
    }
    g[m] = -s;
    pw[1][m] = g[m];
  }
  return g;
}

}  // namespace noncross
