#pragma once

#include <optional>

#include "bicm/constellation.hpp"
#include "bicm/lvalue.hpp"

namespace bicm {

enum class LValueKind { exact, maxlog, corrected };

enum class RateKind {
  mi_exact,
  mi_maxlog,
  mi_corrected,
  gmi_exact,
  gmi_maxlog,
  gmi_harmonized,
  gmi_bicm,
  mi_bicm,
};

struct RateValue {
  double value = 0.0;  // bits per channel use
  RateKind kind = RateKind::mi_exact;
  std::optional<double> s_star;  // minimizing s, GMI kinds only
  bool s_at_boundary = false;    // minimizer hit the search boundary
};

struct QuadratureConfig {
  int nodes_per_point = 64;  // quadrature order per conditioning point, >= 8
  double s_lo = 1e-4;        // s-search interval for the GMI infimum
  double s_hi = 8.0;
  double s_rel_tol = 1e-8;
  double window_sigmas = 8.5;  // Gaussian truncation for split quadrature
};

// E[log2(1 + e^{-s*Bcheck*L})] for the bit channel of pattern p, with L per
// lvalue_kind (corrected = g applied to the max-log L-value).
double gmi_objective(const Constellation& c, const Pattern& p, Snr snr,
                     LValueKind lvalue_kind, double s,
                     const QuadratureConfig& quad = {});

// Bit-level GMI: 1 - inf_s of the objective. For exact L-values the infimum
// sits at s = 1. A corrected-kind result carries RateKind::mi_corrected
// since GMI of corrected L-values equals the max-log MI.
RateValue bit_gmi(const Constellation& c, const Pattern& p, Snr snr,
                  LValueKind lvalue_kind, const QuadratureConfig& quad = {});

// I(B;Y) = I(B;L^ex), by Gauss-Hermite quadrature over the observation.
RateValue bit_mi_exact(const Constellation& c, const Pattern& p, Snr snr,
                       const QuadratureConfig& quad = {});

// I(B;L^ml), integrating the analytic L-value density log-ratio over y.
RateValue bit_mi_maxlog(const Constellation& c, const Pattern& p, Snr snr,
                        const QuadratureConfig& quad = {});

// Sum of the m bit-level MIs. lvalue_kind must be exact or maxlog.
RateValue bicm_mi(const Constellation& c, const Labeling& lab, Snr snr,
                  LValueKind lvalue_kind, const QuadratureConfig& quad = {});

// m - inf over a single common s of the summed per-bit objectives.
RateValue bicm_gmi(const Constellation& c, const Labeling& lab, Snr snr,
                   LValueKind lvalue_kind, const QuadratureConfig& quad = {});

// Sum of per-bit GMIs, each with its own minimizing s.
RateValue harmonized_gmi(const Constellation& c, const Labeling& lab, Snr snr,
                         LValueKind lvalue_kind,
                         const QuadratureConfig& quad = {});

}  // namespace bicm
