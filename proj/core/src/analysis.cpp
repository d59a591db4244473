#include "bicm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bicm/parallel.hpp"

namespace bicm {

namespace {

Pattern single_crossing_pattern(int M) {
  std::vector<std::uint8_t> bits(std::size_t(M), 0);
  for (int k = M / 2; k < M; ++k) bits[std::size_t(k)] = 1;
  return Pattern(std::move(bits));
}

Pattern symmetric_two_crossing_pattern(int M) {
  std::vector<std::uint8_t> bits(std::size_t(M), 0);
  for (int k = M / 4; k < M / 4 + M / 2; ++k) bits[std::size_t(k)] = 1;
  return Pattern(std::move(bits));
}

Pattern alternating_pattern(int M) {
  std::vector<std::uint8_t> bits(std::size_t(M), 0);
  for (int k = 1; k < M; k += 2) bits[std::size_t(k)] = 1;
  return Pattern(std::move(bits));
}

int zero_crossing_count(const Pattern& p) {
  int n = 0;
  for (int k = 1; k < p.size(); ++k) n += p[k] != p[k - 1];
  return n;
}

}  // namespace

LosslessVerdict classify_pattern(const Constellation& c, const Pattern& p) {
  if (p.size() != c.size()) {
    throw std::invalid_argument("classify_pattern: pattern/constellation size mismatch");
  }
  const int M = c.size();
  const Pattern canon = canonical_pattern(p);

  if (canon == single_crossing_pattern(M)) {
    return {LosslessCase::case_i, "equivalent to p_I"};
  }
  if (M % 4 == 0 && canon == symmetric_two_crossing_pattern(M)) {
    if (symmetry_center(c).has_value()) {
      return {LosslessCase::case_ii, "equivalent to p_II, symmetric constellation"};
    }
    return {LosslessCase::lossy, "equivalent to p_II, asymmetric constellation"};
  }
  if (canon == canonical_pattern(alternating_pattern(M))) {
    return {LosslessCase::lossy, "p_III"};
  }
  return {LosslessCase::lossy,
          std::to_string(zero_crossing_count(p)) + " zero-crossings"};
}

LabelingClassification classify_labeling(const Constellation& c,
                                         const Labeling& lab) {
  LabelingClassification out;
  out.all_lossless = true;
  for (const Pattern& row : lab.rows()) {
    out.rows.push_back(classify_pattern(c, row));
    out.all_lossless = out.all_lossless && out.rows.back().lossless();
  }
  return out;
}

RateCurve::RateCurve(std::vector<double> snr_db, std::vector<double> rates,
                     double rate_ceiling, std::string label)
    : snr_db_(std::move(snr_db)),
      rates_(std::move(rates)),
      rate_ceiling_(rate_ceiling),
      label_(std::move(label)) {
  const std::size_t n = snr_db_.size();
  if (n < 2 || rates_.size() != n) {
    throw std::invalid_argument("RateCurve: need >= 2 aligned samples");
  }
  // Strictly increasing up to floating-point saturation: once a rate pins
  // at its ceiling, consecutive samples become equal doubles, so exact ties
  // are tolerated while any real decrease is a numerical failure.
  constexpr double kTieTol = 1e-12;
  for (std::size_t i = 1; i < n; ++i) {
    if (!(snr_db_[i] > snr_db_[i - 1])) {
      throw std::invalid_argument("RateCurve: SNR grid must be strictly increasing");
    }
    if (rates_[i] < rates_[i - 1] - kTieTol) {
      throw std::runtime_error("RateCurve: rates not increasing near " +
                               std::to_string(snr_db_[i]) + " dB");
    }
  }
  if (!(rates_.back() > rates_.front() + kTieTol)) {
    throw std::runtime_error("RateCurve: curve is flat");
  }

  // Fritsch-Carlson slopes keep the cubic pieces monotone.
  slopes_.resize(n);
  std::vector<double> h(n - 1), d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = snr_db_[i + 1] - snr_db_[i];
    d[i] = std::max(0.0, (rates_[i + 1] - rates_[i]) / h[i]);
  }
  if (n == 2) {
    slopes_[0] = slopes_[1] = d[0];
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (d[i - 1] <= 0.0 || d[i] <= 0.0) {
        slopes_[i] = 0.0;
        continue;
      }
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      slopes_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
      const double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
      if (m * d0 <= 0.0) return 0.0;
      if (d0 * d1 < 0.0 && std::abs(m) > 3.0 * std::abs(d0)) return 3.0 * d0;
      return m;
    };
    slopes_[0] = end_slope(h[0], h[1], d[0], d[1]);
    slopes_[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  }
}

double RateCurve::eval(double x) const {
  if (x <= snr_db_.front()) return rates_.front();
  if (x >= snr_db_.back()) return rates_.back();
  const auto it = std::upper_bound(snr_db_.begin(), snr_db_.end(), x);
  const std::size_t i = std::size_t(it - snr_db_.begin()) - 1;
  const double h = snr_db_[i + 1] - snr_db_[i];
  const double t = (x - snr_db_[i]) / h;
  const double y0 = rates_[i], y1 = rates_[i + 1];
  const double m0 = slopes_[i] * h, m1 = slopes_[i + 1] * h;
  const double t2 = t * t, t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * m0 +
         (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * m1;
}

double RateCurve::invert(double target) const {
  if (!(target >= rates_.front() && target <= rates_.back())) {
    throw std::out_of_range("RateCurve::invert: target " + std::to_string(target) +
                            " outside achievable range [" +
                            std::to_string(rates_.front()) + ", " +
                            std::to_string(rates_.back()) + "]");
  }
  double lo = snr_db_.front(), hi = snr_db_.back();
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (eval(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

RateCurve build_curve(const std::function<double(double)>& rate_at_db,
                      std::span<const double> snr_grid_db, double rate_ceiling,
                      std::string label) {
  if (snr_grid_db.size() < 2) {
    throw std::invalid_argument("build_curve: grid needs at least 2 points");
  }
  std::vector<double> grid(snr_grid_db.begin(), snr_grid_db.end());
  std::vector<double> rates(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { rates[i] = rate_at_db(grid[i]); });
  return RateCurve(std::move(grid), std::move(rates), rate_ceiling,
                   std::move(label));
}

double invert_rate(const RateCurve& curve, double target_rate) {
  return curve.invert(target_rate);
}

double loss_db(const RateCurve& reference, const RateCurve& degraded,
               double target_rate) {
  if (reference.rate_ceiling() != degraded.rate_ceiling()) {
    throw std::invalid_argument(
        "loss_db: curves have different rate ranges and cannot be compared");
  }
  return degraded.invert(target_rate) - reference.invert(target_rate);
}

}  // namespace bicm
