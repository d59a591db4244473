#include "bicm/rates.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "bicm/numerics.hpp"
#include "bicm/quadrature.hpp"

namespace bicm {

namespace {

double clamp_rate(double v) { return v < 1e-12 ? 0.0 : v; }

void check_quad(const QuadratureConfig& quad) {
  if (quad.nodes_per_point < 8) {
    throw std::invalid_argument("QuadratureConfig: nodes_per_point must be >= 8");
  }
}

// Everything needed to evaluate one bit channel repeatedly for a fixed
// (constellation, pattern, snr): subconstellations, per-point bits, and the
// max-log machinery built on demand.
struct BitChannel {
  BitChannel(const Constellation& c, const Pattern& p, Snr snr_in)
      : snr(snr_in),
        points(c.points()),
        bits(p.bits()),
        s0(subconstellation(c, p, 0)),
        s1(subconstellation(c, p, 1)),
        log_w(std::log(2.0 / c.size()) + 0.5 * std::log(snr_in.rho / M_PI)) {}

  const ConditionalLValueDensity& density() const {
    if (!density_) {
      density_ = std::make_shared<ConditionalLValueDensity>(
          PiecewiseLinearLValue(Constellation(points), Pattern(bits), snr));
    }
    return *density_;
  }

  double lvalue(LValueKind kind, double y) const {
    switch (kind) {
      case LValueKind::exact:
        return exact_lvalue(s0, s1, snr.rho, y);
      case LValueKind::maxlog:
        return maxlog_lvalue(s0, s1, snr.rho, y);
      case LValueKind::corrected: {
        const auto& d = density();
        const double l = d.lvalue_map().eval(y);
        return d.log_eval(l, 1) - d.log_eval(l, 0);
      }
    }
    return 0.0;
  }

  // y-locations where the integrand is allowed to be non-smooth.
  std::vector<double> splits(LValueKind kind) const {
    switch (kind) {
      case LValueKind::exact:
        return {};
      case LValueKind::maxlog:
        return density().lvalue_map().breakpoints();
      case LValueKind::corrected:
        return density().split_points_y();
    }
    return {};
  }

  Snr snr;
  std::vector<double> points;
  std::vector<std::uint8_t> bits;
  std::vector<double> s0, s1;
  double log_w;

 private:
  mutable std::shared_ptr<ConditionalLValueDensity> density_;
};

// (1/M) sum_k E_{Y ~ N(a_k, 1/(2rho))}[ f(y, bit_k) ]. Each expectation is
// integrated on Gauss-Legendre panels split at the integrand's kink
// locations (none for exact L-values); plain Gauss-Hermite stalls near
// 1e-7 on these integrands, which is not enough headroom for the
// node-doubling stability this module promises.
double channel_expectation(const BitChannel& ch, LValueKind kind,
                           const QuadratureConfig& quad,
                           const std::function<double(double, int)>& f) {
  const double sigma = ch.snr.noise_sigma();
  const auto splits = ch.splits(kind);
  double acc = 0.0;
  for (std::size_t k = 0; k < ch.points.size(); ++k) {
    const int b = ch.bits[k];
    auto g = [&](double y) { return f(y, b); };
    acc += gaussian_expectation_split(g, ch.points[k], sigma, splits,
                                      quad.nodes_per_point,
                                      quad.window_sigmas);
  }
  return acc / double(ch.points.size());
}

double objective_of(const BitChannel& ch, LValueKind kind, double s,
                    const QuadratureConfig& quad) {
  return channel_expectation(ch, kind, quad, [&](double y, int b) {
    const double l = ch.lvalue(kind, y);
    const double b_signed = b ? 1.0 : -1.0;
    return log2_1p_exp_neg(s * b_signed * l);
  });
}

double mi_exact_of(const BitChannel& ch, const QuadratureConfig& quad) {
  const double rho = ch.snr.rho;
  return channel_expectation(ch, LValueKind::exact, quad, [&](double y, int b) {
    const double lf0 = ch.log_w + log_gaussian_sum(ch.s0, rho, y);
    const double lf1 = ch.log_w + log_gaussian_sum(ch.s1, rho, y);
    const double lf_own = b ? lf1 : lf0;
    const double log_fy = -kLn2 + log_sum_exp(std::array{lf0, lf1});
    return (lf_own - log_fy) / kLn2;
  });
}

double mi_maxlog_of(const BitChannel& ch, const QuadratureConfig& quad) {
  const auto& d = ch.density();
  return channel_expectation(ch, LValueKind::corrected, quad, [&](double y, int b) {
    const double l = d.lvalue_map().eval(y);
    const double own = d.log_eval(l, b);
    const double other = d.log_eval(l, 1 - b);
    const double log_mix = -kLn2 + log_sum_exp(std::array{own, other});
    return (own - log_mix) / kLn2;
  });
}

RateKind gmi_kind_for(LValueKind kind) {
  switch (kind) {
    case LValueKind::exact:
      return RateKind::gmi_exact;
    case LValueKind::maxlog:
      return RateKind::gmi_maxlog;
    case LValueKind::corrected:
      return RateKind::mi_corrected;
  }
  return RateKind::gmi_exact;
}

void require_exact_or_maxlog(LValueKind kind, const char* where) {
  if (kind == LValueKind::corrected) {
    throw std::invalid_argument(std::string(where) +
                                ": lvalue_kind must be exact or maxlog");
  }
}

}  // namespace

double gmi_objective(const Constellation& c, const Pattern& p, Snr snr,
                     LValueKind lvalue_kind, double s,
                     const QuadratureConfig& quad) {
  check_quad(quad);
  if (s < 0.0) throw std::invalid_argument("gmi_objective: s must be >= 0");
  BitChannel ch(c, p, snr);
  return objective_of(ch, lvalue_kind, s, quad);
}

RateValue bit_gmi(const Constellation& c, const Pattern& p, Snr snr,
                  LValueKind lvalue_kind, const QuadratureConfig& quad) {
  check_quad(quad);
  BitChannel ch(c, p, snr);
  const auto res = golden_section_min(
      [&](double s) { return objective_of(ch, lvalue_kind, s, quad); },
      quad.s_lo, quad.s_hi, quad.s_rel_tol);
  RateValue rv;
  rv.value = clamp_rate(1.0 - res.value);
  rv.kind = gmi_kind_for(lvalue_kind);
  rv.s_star = res.arg;
  rv.s_at_boundary = res.at_boundary;
  return rv;
}

RateValue bit_mi_exact(const Constellation& c, const Pattern& p, Snr snr,
                       const QuadratureConfig& quad) {
  check_quad(quad);
  BitChannel ch(c, p, snr);
  RateValue rv;
  rv.value = clamp_rate(mi_exact_of(ch, quad));
  rv.kind = RateKind::mi_exact;
  return rv;
}

RateValue bit_mi_maxlog(const Constellation& c, const Pattern& p, Snr snr,
                        const QuadratureConfig& quad) {
  check_quad(quad);
  BitChannel ch(c, p, snr);
  RateValue rv;
  rv.value = clamp_rate(mi_maxlog_of(ch, quad));
  rv.kind = RateKind::mi_maxlog;
  return rv;
}

RateValue bicm_mi(const Constellation& c, const Labeling& lab, Snr snr,
                  LValueKind lvalue_kind, const QuadratureConfig& quad) {
  check_quad(quad);
  require_exact_or_maxlog(lvalue_kind, "bicm_mi");
  double total = 0.0;
  for (const Pattern& row : lab.rows()) {
    total += lvalue_kind == LValueKind::exact
                 ? bit_mi_exact(c, row, snr, quad).value
                 : bit_mi_maxlog(c, row, snr, quad).value;
  }
  RateValue rv;
  rv.value = clamp_rate(total);
  rv.kind = RateKind::mi_bicm;
  return rv;
}

RateValue bicm_gmi(const Constellation& c, const Labeling& lab, Snr snr,
                   LValueKind lvalue_kind, const QuadratureConfig& quad) {
  check_quad(quad);
  require_exact_or_maxlog(lvalue_kind, "bicm_gmi");
  std::vector<BitChannel> rows;
  rows.reserve(std::size_t(lab.bit_count()));
  for (const Pattern& row : lab.rows()) rows.emplace_back(c, row, snr);
  const auto res = golden_section_min(
      [&](double s) {
        double sum = 0.0;
        for (const auto& ch : rows) sum += objective_of(ch, lvalue_kind, s, quad);
        return sum;
      },
      quad.s_lo, quad.s_hi, quad.s_rel_tol);
  RateValue rv;
  rv.value = clamp_rate(double(lab.bit_count()) - res.value);
  rv.kind = RateKind::gmi_bicm;
  rv.s_star = res.arg;
  rv.s_at_boundary = res.at_boundary;
  return rv;
}

RateValue harmonized_gmi(const Constellation& c, const Labeling& lab, Snr snr,
                         LValueKind lvalue_kind,
                         const QuadratureConfig& quad) {
  check_quad(quad);
  require_exact_or_maxlog(lvalue_kind, "harmonized_gmi");
  double total = 0.0;
  bool boundary = false;
  for (const Pattern& row : lab.rows()) {
    const RateValue rv = bit_gmi(c, row, snr, lvalue_kind, quad);
    total += rv.value;
    boundary = boundary || rv.s_at_boundary;
  }
  RateValue rv;
  rv.value = clamp_rate(total);
  rv.kind = RateKind::gmi_harmonized;
  rv.s_at_boundary = boundary;
  return rv;
}

}  // namespace bicm
