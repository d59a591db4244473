#pragma once

#include <span>
#include <vector>

#include "bicm/constellation.hpp"

namespace bicm {

// Linear average SNR rho = 1/N0; the noise variance is N0/2 = 1/(2*rho).
struct Snr {
  explicit Snr(double rho_linear);
  static Snr from_db(double db);

  double rho;
  double db() const;
  double noise_sigma() const;  // sqrt(1/(2*rho))
};

// log sum_{x in pts} e^{-rho (y-x)^2}, evaluated with max subtraction.
double log_gaussian_sum(std::span<const double> pts, double rho, double y);

// log f_{Y|B_j}(y|b) for the bit channel induced by pattern p.
double log_observation_density(const Constellation& c, const Pattern& p,
                               Snr snr, int b, double y);

// log f_Y(y) for equiprobable symbols.
double log_observation_density(const Constellation& c, Snr snr, double y);

// Exact L-value: the log-likelihood ratio of the bit given the observation,
// evaluated via log-sum-exp with max subtraction.
double exact_lvalue(const Constellation& c, const Pattern& p, Snr snr, double y);
double exact_lvalue(std::span<const double> s0, std::span<const double> s1,
                    double rho, double y);

// Max-log L-value: rho * [min over S0 of (y-x)^2 - min over S1 of (y-x)^2].
double maxlog_lvalue(const Constellation& c, const Pattern& p, Snr snr, double y);
double maxlog_lvalue(std::span<const double> s0, std::span<const double> s1,
                     double rho, double y);

struct LValueSegment {
  double y_lo, y_hi;        // segment interval, +-inf at the ends
  double slope, intercept;  // l(y) = slope*y + intercept, slope != 0
  double l_min, l_max;      // l-range over the segment, +-inf possible
};

// The max-log L-value as a continuous piecewise linear function of the
// observation. Slopes change at midpoints between neighboring points
// labeled with the same bit; zero-crossings sit at midpoints between
// adjacent points labeled with different bits.
class PiecewiseLinearLValue {
 public:
  PiecewiseLinearLValue(const Constellation& c, const Pattern& p, Snr snr);

  double eval(double y) const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<LValueSegment>& segments() const { return segments_; }
  const std::vector<double>& zero_crossings() const { return zero_crossings_; }
  // l-values at the breakpoints; the conditional density of the L-value is
  // non-smooth exactly there.
  const std::vector<double>& kink_values() const { return kink_values_; }

  double rho() const { return rho_; }
  double noise_sigma() const;
  std::span<const double> subset(int b) const;
  std::span<const double> constellation_points() const { return all_points_; }

 private:
  double rho_;
  std::vector<double> s0_, s1_, all_points_;
  std::vector<double> breakpoints_;
  std::vector<LValueSegment> segments_;
  std::vector<double> zero_crossings_;
  std::vector<double> kink_values_;
};

PiecewiseLinearLValue build_piecewise(const Constellation& c, const Pattern& p,
                                      Snr snr);

// Analytic conditional PDF f_{L^ml|B}(l|b): on each l-interval a sum of
// transformed Gaussian pieces, one per linear segment whose range covers l.
class ConditionalLValueDensity {
 public:
  explicit ConditionalLValueDensity(PiecewiseLinearLValue pl);
  ConditionalLValueDensity(const Constellation& c, const Pattern& p, Snr snr);

  double eval(double l, int b) const;
  // log f_{L|B}(l|b); -inf outside the support.
  double log_eval(double l, int b) const;
  // P(L <= l | B = b), exact from segment Gaussian tails.
  double cdf(double l, int b) const;

  double support_min() const { return support_min_; }
  double support_max() const { return support_max_; }

  // y-locations at which integrands composed from this density stop being
  // smooth: the slope breakpoints plus every in-segment preimage of a
  // density kink value.
  const std::vector<double>& split_points_y() const { return split_points_y_; }

  const PiecewiseLinearLValue& lvalue_map() const { return pl_; }

 private:
  PiecewiseLinearLValue pl_;
  double log_point_weight_;  // log(2/M * sqrt(rho/pi))
  double support_min_, support_max_;
  std::vector<double> split_points_y_;
};

// Ideal correction g(l) = log( f_{L^ml|B}(l|1) / f_{L^ml|B}(l|0) ).
// Throws std::domain_error where either conditional density vanishes.
double correction_g(const ConditionalLValueDensity& density, double l);
double correction_g(const Constellation& c, const Pattern& p, Snr snr, double l);

}  // namespace bicm
