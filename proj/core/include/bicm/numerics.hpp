#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace bicm {

inline constexpr double kLn2 = 0.6931471805599453094172321;

// log2(1 + e^{-x}), stable for any x (no overflow for large negative x).
inline double log2_1p_exp_neg(double x) {
  if (x >= 0.0) {
    return std::log1p(std::exp(-x)) / kLn2;
  }
  return (-x + std::log1p(std::exp(x))) / kLn2;
}

// log(sum_i e^{a_i}) with max subtraction; terms more than `cutoff` below
// the maximum contribute less than e^-cutoff relatively and are skipped.
inline double log_sum_exp(std::span<const double> a, double cutoff = 45.0) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : a) m = std::max(m, v);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double v : a) {
    const double d = v - m;
    if (d > -cutoff) s += std::exp(d);
  }
  return m + std::log(s);
}

inline double normal_pdf(double y, double mean, double sigma) {
  const double t = (y - mean) / sigma;
  return std::exp(-0.5 * t * t) / (sigma * 2.5066282746310005024);
}

inline double normal_cdf(double y, double mean, double sigma) {
  return 0.5 * std::erfc(-(y - mean) / (sigma * 1.4142135623730950488));
}

}  // namespace bicm
