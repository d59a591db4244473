#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bicm/constellation.hpp"

namespace bicm {

enum class LosslessCase { case_i, case_ii, lossy };

struct LosslessVerdict {
  LosslessCase verdict;
  std::string reason;
  bool lossless() const { return verdict != LosslessCase::lossy; }
};

// Classification of a single bit pattern: the max-log approximation is
// information lossless iff the pattern is equivalent to the single-crossing
// pattern (any constellation), or to the symmetric two-crossing pattern on
// a symmetric constellation.
LosslessVerdict classify_pattern(const Constellation& c, const Pattern& p);

struct LabelingClassification {
  std::vector<LosslessVerdict> rows;
  bool all_lossless;
};

LabelingClassification classify_labeling(const Constellation& c,
                                         const Labeling& lab);

// Monotone rate-vs-SNR curve: strictly increasing samples joined by a
// monotonicity-preserving piecewise-cubic interpolant, invertible by
// bisection.
class RateCurve {
 public:
  RateCurve(std::vector<double> snr_db, std::vector<double> rates,
            double rate_ceiling, std::string label);

  double eval(double snr_db) const;
  // SNR in dB at which the curve reaches the target rate. Throws
  // std::out_of_range (naming the achievable range) outside the samples.
  double invert(double target_rate) const;

  const std::vector<double>& snr_db() const { return snr_db_; }
  const std::vector<double>& rates() const { return rates_; }
  double min_rate() const { return rates_.front(); }
  double max_rate() const { return rates_.back(); }
  // 1 for bit-level rates, m for labeling-level rates; curves with
  // different ceilings must not be compared.
  double rate_ceiling() const { return rate_ceiling_; }
  const std::string& label() const { return label_; }

 private:
  std::vector<double> snr_db_;
  std::vector<double> rates_;
  std::vector<double> slopes_;
  double rate_ceiling_;
  std::string label_;
};

// Samples rate_at_db over the grid (in parallel), validates strict
// monotonicity and wraps the result in a RateCurve. Throws
// std::runtime_error when the samples come out non-monotone.
RateCurve build_curve(const std::function<double(double)>& rate_at_db,
                      std::span<const double> snr_grid_db, double rate_ceiling,
                      std::string label);

double invert_rate(const RateCurve& curve, double target_rate);

// Horizontal dB gap at the target rate: SNR needed by the degraded curve
// minus SNR needed by the reference. Curves must have the same rate range.
double loss_db(const RateCurve& reference, const RateCurve& degraded,
               double target_rate);

}  // namespace bicm
