#pragma once

#include <vector>

#include "bigcount.hpp"

namespace noncross {

// Truncated formal power series with exact integer coefficients. A series of
// truncation order T stores c_0..c_T; every operation truncates at T, and
// binary operations require both operands to share T.
class PowerSeries {
 public:
  explicit PowerSeries(unsigned order) : c_(order + 1) {}
  PowerSeries(unsigned order, std::vector<BigCount> coeffs);

  unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
  const BigCount& operator[](unsigned i) const { return c_[i]; }
  BigCount& operator[](unsigned i) { return c_[i]; }
  const std::vector<BigCount>& coeffs() const { return c_; }

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<BigCount> c_;
};

PowerSeries series_add(const PowerSeries& f, const PowerSeries& g);
PowerSeries series_scale(const PowerSeries& f, const BigCount& c);

// Cauchy product truncated at the shared order. Mismatched orders throw.
PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g);

// Multiplication by x (drops the top coefficient).
PowerSeries series_shift_up(const PowerSeries& f);

// f(g(x)) truncated; g must have zero constant term.
PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g);

// Reciprocal of a series with constant term exactly 1; integral via the
// triangular solve.
PowerSeries series_reciprocal(const PowerSeries& f);

// Compositional inverse of f with c_0 = 0 and c_1 = 1: the unique g with
// f(g(x)) = x + O(x^{T+1}). The unit leading coefficient keeps every
// coefficient of g an exact integer.
PowerSeries series_reversion(const PowerSeries& f);

}  // namespace noncross
