#include "bicm/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "bicm/numerics.hpp"
#include "bicm/quadrature.hpp"

namespace bicm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTailMass = 1e-10;
constexpr double kIntegralAbsTol = 1e-10;
constexpr double kIntegralRelTol = 1e-9;

std::vector<double> merged_breakpoints(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || x - out.back() > 1e-12 * (1.0 + std::abs(x))) out.push_back(x);
  }
  return out;
}

double channel_integral(const BinaryInputChannel& ch,
                        const std::function<double(double, int)>& f) {
  const double lo = ch.integration_lo();
  const double hi = ch.integration_hi();
  double acc = 0.0;
  for (int b = 0; b < 2; ++b) {
    acc += 0.5 * integrate_adaptive([&](double l) { return f(l, b); }, lo, hi,
                                    ch.breakpoints(), kIntegralAbsTol,
                                    kIntegralRelTol);
  }
  return acc;
}

double gmi_objective_of_channel(const BinaryInputChannel& ch, double s) {
  return channel_integral(ch, [&](double l, int b) {
    const double w = ch(l, b);
    if (w <= 0.0) return 0.0;
    const double b_signed = b ? 1.0 : -1.0;
    return w * log2_1p_exp_neg(s * b_signed * l);
  });
}

double clamp_rate(double v) { return v < 1e-12 ? 0.0 : v; }

}  // namespace

BinaryInputChannel::BinaryInputChannel(Density density,
                                       std::vector<double> breakpoints,
                                       double support_lo, double support_hi,
                                       double truncation,
                                       ChannelProvenance provenance)
    : density_(std::move(density)),
      breakpoints_(merged_breakpoints(std::move(breakpoints))),
      support_lo_(support_lo),
      support_hi_(support_hi),
      truncation_(truncation),
      provenance_(provenance) {
  if (!(truncation_ > 0.0)) {
    throw std::invalid_argument("BinaryInputChannel: truncation must be positive");
  }
}

double BinaryInputChannel::integration_lo() const {
  return std::max(support_lo_, -truncation_);
}

double BinaryInputChannel::integration_hi() const {
  return std::min(support_hi_, truncation_);
}

BinaryInputChannel channel_from_density(ConditionalLValueDensity density) {
  auto d = std::make_shared<const ConditionalLValueDensity>(std::move(density));

  double t = 1.0;
  auto tail = [&](double T) {
    double worst = 0.0;
    for (int b = 0; b < 2; ++b) {
      worst = std::max(worst, d->cdf(-T, b) + (1.0 - d->cdf(T, b)));
    }
    return worst;
  };
  while (tail(t) > kTailMass) {
    t *= 2.0;
    if (t > 1e18) throw std::runtime_error("channel_from_density: truncation search failed");
  }

  return BinaryInputChannel(
      [d](double l, int b) { return d->eval(l, b); },
      d->lvalue_map().kink_values(), d->support_min(), d->support_max(), t,
      ChannelProvenance::raw_maxlog);
}

BinaryInputChannel make_maxlog_channel(const Constellation& c, const Pattern& p,
                                       Snr snr) {
  return channel_from_density(ConditionalLValueDensity(c, p, snr));
}

BinaryInputChannel symmetrize(const BinaryInputChannel& ch) {
  std::vector<double> bps = ch.breakpoints();
  for (double x : ch.breakpoints()) bps.push_back(-x);
  return BinaryInputChannel(
      [parent = ch](double l, int b) {
        return 0.5 * (parent(l, b) + parent(-l, 1 - b));
      },
      std::move(bps), std::min(ch.support_lo(), -ch.support_hi()),
      std::max(ch.support_hi(), -ch.support_lo()), ch.truncation(),
      ChannelProvenance::symmetrized);
}

BinaryInputChannel flipped(const BinaryInputChannel& ch) {
  std::vector<double> bps;
  for (double x : ch.breakpoints()) bps.push_back(-x);
  return BinaryInputChannel(
      [parent = ch](double l, int b) { return parent(-l, 1 - b); },
      std::move(bps), -ch.support_hi(), -ch.support_lo(), ch.truncation(),
      ch.provenance());
}

BinaryInputChannel mixture(std::span<const BinaryInputChannel> chs,
                           std::span<const double> weights) {
  if (chs.empty()) throw std::invalid_argument("mixture: needs at least one channel");
  if (chs.size() != weights.size()) {
    throw std::invalid_argument("mixture: one weight per channel required");
  }
  double wsum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("mixture: weights must be nonnegative");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-9) {
    throw std::invalid_argument("mixture: weights must sum to 1");
  }

  std::vector<BinaryInputChannel> parts(chs.begin(), chs.end());
  std::vector<double> w(weights.begin(), weights.end());
  std::vector<double> bps;
  double lo = kInf, hi = -kInf, trunc = 0.0;
  for (const auto& ch : parts) {
    bps.insert(bps.end(), ch.breakpoints().begin(), ch.breakpoints().end());
    lo = std::min(lo, ch.support_lo());
    hi = std::max(hi, ch.support_hi());
    trunc = std::max(trunc, ch.truncation());
  }
  return BinaryInputChannel(
      [parts, w](double l, int b) {
        double acc = 0.0;
        for (std::size_t j = 0; j < parts.size(); ++j) acc += w[j] * parts[j](l, b);
        return acc;
      },
      std::move(bps), lo, hi, trunc, ChannelProvenance::mixed);
}

BinaryInputChannel mix(std::span<const BinaryInputChannel> chs) {
  std::vector<double> w(chs.size(), 1.0 / double(chs.size()));
  return mixture(chs, w);
}

RateValue gmi_of_channel(const BinaryInputChannel& ch,
                         const QuadratureConfig& quad) {
  const auto res = golden_section_min(
      [&](double s) { return gmi_objective_of_channel(ch, s); }, quad.s_lo,
      quad.s_hi, quad.s_rel_tol);
  RateValue rv;
  rv.value = clamp_rate(1.0 - res.value);
  rv.kind = RateKind::gmi_maxlog;
  rv.s_star = res.arg;
  rv.s_at_boundary = res.at_boundary;
  return rv;
}

RateValue mi_of_channel(const BinaryInputChannel& ch) {
  const double mi = channel_integral(ch, [&](double l, int b) {
    const double own = ch(l, b);
    if (own <= 0.0) return 0.0;
    const double mixed = 0.5 * (ch(l, 0) + ch(l, 1));
    return own * std::log2(own / mixed);
  });
  RateValue rv;
  rv.value = clamp_rate(mi);
  rv.kind = RateKind::mi_maxlog;
  return rv;
}

double conditional_mi_gap(std::span<const BinaryInputChannel> chs,
                          std::span<const double> weights) {
  if (chs.size() != weights.size()) {
    throw std::invalid_argument("conditional_mi_gap: one weight per channel required");
  }
  double conditional = 0.0;
  for (std::size_t j = 0; j < chs.size(); ++j) {
    conditional += weights[j] * mi_of_channel(chs[j]).value;
  }
  const double mixed = mi_of_channel(mixture(chs, weights)).value;
  return conditional - mixed;
}

RateValue harmonized_gmi_of(std::span<const BinaryInputChannel> chs,
                            const QuadratureConfig& quad) {
  double total = 0.0;
  bool boundary = false;
  for (const auto& ch : chs) {
    const RateValue rv = gmi_of_channel(ch, quad);
    total += rv.value;
    boundary = boundary || rv.s_at_boundary;
  }
  RateValue rv;
  rv.value = clamp_rate(total);
  rv.kind = RateKind::gmi_harmonized;
  rv.s_at_boundary = boundary;
  return rv;
}

RateValue bicm_gmi_of(std::span<const BinaryInputChannel> chs,
                      const QuadratureConfig& quad) {
  if (chs.empty()) throw std::invalid_argument("bicm_gmi_of: needs channels");
  const auto res = golden_section_min(
      [&](double s) {
        double sum = 0.0;
        for (const auto& ch : chs) sum += gmi_objective_of_channel(ch, s);
        return sum;
      },
      quad.s_lo, quad.s_hi, quad.s_rel_tol);
  RateValue rv;
  rv.value = clamp_rate(double(chs.size()) - res.value);
  rv.kind = RateKind::gmi_bicm;
  rv.s_star = res.arg;
  rv.s_at_boundary = res.at_boundary;
  return rv;
}

}  // namespace bicm
