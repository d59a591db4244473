#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bicm/lvalue.hpp"
#include "bicm/rates.hpp"

namespace bicm {

enum class ChannelProvenance { raw_maxlog, symmetrized, mixed };

// A binary-input continuous-output channel held purely at density level:
// W(l|b) for b in {0,1}, plus the support geometry its integrators need.
class BinaryInputChannel {
 public:
  using Density = std::function<double(double l, int b)>;

  BinaryInputChannel(Density density, std::vector<double> breakpoints,
                     double support_lo, double support_hi, double truncation,
                     ChannelProvenance provenance);

  double operator()(double l, int b) const { return density_(l, b); }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }
  // [-T, T] holds all but < 1e-10 of the mass of each conditional.
  double truncation() const { return truncation_; }
  ChannelProvenance provenance() const { return provenance_; }

  double integration_lo() const;
  double integration_hi() const;

 private:
  Density density_;
  std::vector<double> breakpoints_;
  double support_lo_, support_hi_;
  double truncation_;
  ChannelProvenance provenance_;
};

// Raw max-log bit channel backed by the analytic conditional density.
BinaryInputChannel make_maxlog_channel(const Constellation& c, const Pattern& p,
                                       Snr snr);
BinaryInputChannel channel_from_density(ConditionalLValueDensity density);

// i.u.d. adapter: (1/2)(W(l|b) + W(-l|1-b)). The result satisfies
// f(l|b) = f(-l|1-b) exactly.
BinaryInputChannel symmetrize(const BinaryInputChannel& ch);

// The S = 1 branch of the symmetrization switch: W(-l|1-b).
BinaryInputChannel flipped(const BinaryInputChannel& ch);

// Uniform mixture of the given channels.
BinaryInputChannel mix(std::span<const BinaryInputChannel> chs);

// Weighted mixture; weights must sum to 1.
BinaryInputChannel mixture(std::span<const BinaryInputChannel> chs,
                           std::span<const double> weights);

// 1 - inf_s (1/2) sum_b int W(l|b) log2(1+e^{-s*bcheck*l}) dl, by adaptive
// integration over the channel support. Throws std::runtime_error when the
// integration tolerance cannot be reached.
RateValue gmi_of_channel(const BinaryInputChannel& ch,
                         const QuadratureConfig& quad = {});

// I(B;L) at density level.
RateValue mi_of_channel(const BinaryInputChannel& ch);

// I(B;L|S) - I(B;L) >= 0 for a switch S choosing channel j with the given
// probability: sum_j w_j MI(W_j) - MI(mixture).
double conditional_mi_gap(std::span<const BinaryInputChannel> chs,
                          std::span<const double> weights);

// Sum of per-channel GMIs, each with its own minimizing s.
RateValue harmonized_gmi_of(std::span<const BinaryInputChannel> chs,
                            const QuadratureConfig& quad = {});

// m - inf over a single common s of the summed objectives.
RateValue bicm_gmi_of(std::span<const BinaryInputChannel> chs,
                      const QuadratureConfig& quad = {});

}  // namespace bicm
