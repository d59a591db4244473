#include "bicm/lvalue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bicm/numerics.hpp"

namespace bicm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kExpCutoff = 45.0;

// log sum_{x in pts} e^{-rho (y-x)^2}, single pass with running rescale.
double log_sum_gauss(std::span<const double> pts, double rho, double y) {
  double m = -kInf;
  double s = 0.0;
  for (double x : pts) {
    const double d = y - x;
    const double e = -rho * d * d;
    if (e <= m - kExpCutoff) continue;
    if (e > m) {
      s = s * std::exp(m - e) + 1.0;
      m = e;
    } else {
      s += std::exp(e - m);
    }
  }
  return m + std::log(s);
}

double min_sq_dist(std::span<const double> pts, double y) {
  double best = kInf;
  for (double x : pts) {
    const double d = y - x;
    best = std::min(best, d * d);
  }
  return best;
}

double nearest_point(std::span<const double> pts, double y) {
  double best = pts.front();
  double best_d = std::abs(y - best);
  for (double x : pts.subspan(1)) {
    const double d = std::abs(y - x);
    if (d < best_d) {
      best_d = d;
      best = x;
    }
  }
  return best;
}

void append_midpoints(const std::vector<double>& pts, std::vector<double>& out) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    out.push_back(0.5 * (pts[i - 1] + pts[i]));
  }
}

std::vector<double> sorted_unique(std::vector<double> v, double tol = 1e-12) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || x - out.back() > tol * (1.0 + std::abs(x))) out.push_back(x);
  }
  return out;
}

}  // namespace

double log_gaussian_sum(std::span<const double> pts, double rho, double y) {
  return log_sum_gauss(pts, rho, y);
}

Snr::Snr(double rho_linear) : rho(rho_linear) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("Snr: rho must be positive and finite");
  }
}

Snr Snr::from_db(double db) { return Snr(std::pow(10.0, db / 10.0)); }

double Snr::db() const { return 10.0 * std::log10(rho); }

double Snr::noise_sigma() const { return std::sqrt(0.5 / rho); }

double log_observation_density(const Constellation& c, const Pattern& p,
                               Snr snr, int b, double y) {
  const auto sub = subconstellation(c, p, b);
  const double log_w = std::log(2.0 / c.size()) + 0.5 * std::log(snr.rho / M_PI);
  return log_w + log_sum_gauss(sub, snr.rho, y);
}

double log_observation_density(const Constellation& c, Snr snr, double y) {
  const double log_w = std::log(1.0 / c.size()) + 0.5 * std::log(snr.rho / M_PI);
  return log_w + log_sum_gauss(c.points(), snr.rho, y);
}

double exact_lvalue(std::span<const double> s0, std::span<const double> s1,
                    double rho, double y) {
  return log_sum_gauss(s1, rho, y) - log_sum_gauss(s0, rho, y);
}

double exact_lvalue(const Constellation& c, const Pattern& p, Snr snr, double y) {
  const auto s0 = subconstellation(c, p, 0);
  const auto s1 = subconstellation(c, p, 1);
  return exact_lvalue(s0, s1, snr.rho, y);
}

double maxlog_lvalue(std::span<const double> s0, std::span<const double> s1,
                     double rho, double y) {
  return rho * (min_sq_dist(s0, y) - min_sq_dist(s1, y));
}

double maxlog_lvalue(const Constellation& c, const Pattern& p, Snr snr, double y) {
  const auto s0 = subconstellation(c, p, 0);
  const auto s1 = subconstellation(c, p, 1);
  return maxlog_lvalue(s0, s1, snr.rho, y);
}

PiecewiseLinearLValue::PiecewiseLinearLValue(const Constellation& c,
                                             const Pattern& p, Snr snr)
    : rho_(snr.rho),
      s0_(subconstellation(c, p, 0)),
      s1_(subconstellation(c, p, 1)),
      all_points_(c.points()) {
  std::vector<double> mids;
  append_midpoints(s0_, mids);
  append_midpoints(s1_, mids);
  breakpoints_ = sorted_unique(std::move(mids));

  const std::size_t n_seg = breakpoints_.size() + 1;
  segments_.reserve(n_seg);
  for (std::size_t i = 0; i < n_seg; ++i) {
    const double y_lo = i == 0 ? -kInf : breakpoints_[i - 1];
    const double y_hi = i == breakpoints_.size() ? kInf : breakpoints_[i];
    double probe;
    if (std::isinf(y_lo) && std::isinf(y_hi)) {
      probe = 0.0;
    } else if (std::isinf(y_lo)) {
      probe = y_hi - 1.0;
    } else if (std::isinf(y_hi)) {
      probe = y_lo + 1.0;
    } else {
      probe = 0.5 * (y_lo + y_hi);
    }
    const double a_t = nearest_point(s0_, probe);
    const double a_s = nearest_point(s1_, probe);
    LValueSegment seg;
    seg.y_lo = y_lo;
    seg.y_hi = y_hi;
    seg.slope = 2.0 * rho_ * (a_s - a_t);
    seg.intercept = rho_ * (a_t * a_t - a_s * a_s);
    const double l_lo = std::isinf(y_lo) ? (seg.slope > 0 ? -kInf : kInf)
                                         : seg.slope * y_lo + seg.intercept;
    const double l_hi = std::isinf(y_hi) ? (seg.slope > 0 ? kInf : -kInf)
                                         : seg.slope * y_hi + seg.intercept;
    seg.l_min = std::min(l_lo, l_hi);
    seg.l_max = std::max(l_lo, l_hi);
    segments_.push_back(seg);
  }

  // The function must come out continuous across every breakpoint.
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const double y = breakpoints_[i];
    const double left = segments_[i].slope * y + segments_[i].intercept;
    const double right = segments_[i + 1].slope * y + segments_[i + 1].intercept;
    if (std::abs(left - right) > 1e-9 * std::max(1.0, std::abs(left))) {
      throw std::logic_error("PiecewiseLinearLValue: discontinuity at breakpoint");
    }
  }

  for (std::size_t k = 1; k < all_points_.size(); ++k) {
    if (p[int(k - 1)] != p[int(k)]) {
      zero_crossings_.push_back(0.5 * (all_points_[k - 1] + all_points_[k]));
    }
  }

  std::vector<double> kv;
  kv.reserve(breakpoints_.size());
  for (double bp : breakpoints_) kv.push_back(eval(bp));
  kink_values_ = sorted_unique(std::move(kv));
}

double PiecewiseLinearLValue::eval(double y) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), y);
  const auto& seg = segments_[std::size_t(it - breakpoints_.begin())];
  return seg.slope * y + seg.intercept;
}

double PiecewiseLinearLValue::noise_sigma() const { return std::sqrt(0.5 / rho_); }

std::span<const double> PiecewiseLinearLValue::subset(int b) const {
  return b == 0 ? std::span<const double>(s0_) : std::span<const double>(s1_);
}

PiecewiseLinearLValue build_piecewise(const Constellation& c, const Pattern& p,
                                      Snr snr) {
  return PiecewiseLinearLValue(c, p, snr);
}

ConditionalLValueDensity::ConditionalLValueDensity(PiecewiseLinearLValue pl)
    : pl_(std::move(pl)) {
  const double m = double(pl_.constellation_points().size());
  log_point_weight_ = std::log(2.0 / m) + 0.5 * std::log(pl_.rho() / M_PI);

  support_min_ = kInf;
  support_max_ = -kInf;
  for (const auto& seg : pl_.segments()) {
    support_min_ = std::min(support_min_, seg.l_min);
    support_max_ = std::max(support_max_, seg.l_max);
  }

  std::vector<double> splits(pl_.breakpoints());
  for (const auto& seg : pl_.segments()) {
    for (double v : pl_.kink_values()) {
      if (v <= seg.l_min || v >= seg.l_max) continue;
      const double y = (v - seg.intercept) / seg.slope;
      if (y > seg.y_lo && y < seg.y_hi) splits.push_back(y);
    }
  }
  split_points_y_ = sorted_unique(std::move(splits));
}

ConditionalLValueDensity::ConditionalLValueDensity(const Constellation& c,
                                                   const Pattern& p, Snr snr)
    : ConditionalLValueDensity(PiecewiseLinearLValue(c, p, snr)) {}

double ConditionalLValueDensity::eval(double l, int b) const {
  const double lv = log_eval(l, b);
  return std::isfinite(lv) ? std::exp(lv) : 0.0;
}

double ConditionalLValueDensity::log_eval(double l, int b) const {
  const auto pts = pl_.subset(b);
  const double rho = pl_.rho();
  double m = -kInf;
  double s = 0.0;
  for (const auto& seg : pl_.segments()) {
    if (l < seg.l_min || l > seg.l_max) continue;
    const double y = (l - seg.intercept) / seg.slope;
    const double term =
        log_sum_gauss(pts, rho, y) - std::log(std::abs(seg.slope));
    if (term <= m - kExpCutoff) continue;
    if (term > m) {
      s = s * std::exp(m - term) + 1.0;
      m = term;
    } else {
      s += std::exp(term - m);
    }
  }
  if (!std::isfinite(m)) return -kInf;
  return log_point_weight_ + m + std::log(s);
}

double ConditionalLValueDensity::cdf(double l, int b) const {
  const auto pts = pl_.subset(b);
  const double sigma = pl_.noise_sigma();
  const double M = double(pl_.constellation_points().size());
  double acc = 0.0;
  for (const auto& seg : pl_.segments()) {
    double y_lo = seg.y_lo, y_hi = seg.y_hi;
    if (l >= seg.l_max) {
      // whole segment satisfies l(y) <= l
    } else if (l <= seg.l_min) {
      continue;
    } else {
      const double y_star = (l - seg.intercept) / seg.slope;
      if (seg.slope > 0) {
        y_hi = std::min(y_hi, y_star);
      } else {
        y_lo = std::max(y_lo, y_star);
      }
    }
    if (!(y_hi > y_lo)) continue;
    for (double x : pts) {
      const double hi = std::isinf(y_hi) ? 1.0 : normal_cdf(y_hi, x, sigma);
      const double lo = std::isinf(y_lo) ? 0.0 : normal_cdf(y_lo, x, sigma);
      acc += (2.0 / M) * (hi - lo);
    }
  }
  return std::clamp(acc, 0.0, 1.0);
}

double correction_g(const ConditionalLValueDensity& density, double l) {
  const double l1 = density.log_eval(l, 1);
  const double l0 = density.log_eval(l, 0);
  if (!std::isfinite(l1) || !std::isfinite(l0)) {
    throw std::domain_error("correction_g: density vanishes at the given l");
  }
  return l1 - l0;
}

double correction_g(const Constellation& c, const Pattern& p, Snr snr, double l) {
  return correction_g(ConditionalLValueDensity(c, p, snr), l);
}

}  // namespace bicm
