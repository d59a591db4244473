#include "bicm/oracle.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "bicm/numerics.hpp"
#include "bicm/parallel.hpp"

namespace bicm {

namespace {

constexpr std::uint64_t kBlock = 1 << 14;
constexpr std::uint64_t kDrawsPerSample = 4;

struct BitView {
  std::vector<double> s0, s1;
  std::vector<std::uint8_t> bits;
  std::unique_ptr<ConditionalLValueDensity> density;  // maxlog kinds only

  BitView(const Constellation& c, const Pattern& p, Snr snr, bool need_density)
      : s0(subconstellation(c, p, 0)),
        s1(subconstellation(c, p, 1)),
        bits(p.bits()) {
    if (need_density) {
      density = std::make_unique<ConditionalLValueDensity>(c, p, snr);
    }
  }
};

double mi_exact_integrand(const Constellation& c, const BitView& v, Snr snr,
                          int b, double y) {
  const double log_w = std::log(2.0 / c.size()) + 0.5 * std::log(snr.rho / M_PI);
  const double lf0 = log_w + log_gaussian_sum(v.s0, snr.rho, y);
  const double lf1 = log_w + log_gaussian_sum(v.s1, snr.rho, y);
  const double own = b ? lf1 : lf0;
  const double log_fy = -kLn2 + log_sum_exp(std::array{lf0, lf1});
  return (own - log_fy) / kLn2;
}

double mi_maxlog_integrand(const BitView& v, int b, double y) {
  const auto& d = *v.density;
  const double l = d.lvalue_map().eval(y);
  const double own = d.log_eval(l, b);
  const double other = d.log_eval(l, 1 - b);
  const double log_mix = -kLn2 + log_sum_exp(std::array{own, other});
  return (own - log_mix) / kLn2;
}

double lvalue_of(const BitView& v, Snr snr, LValueKind kind, double y) {
  switch (kind) {
    case LValueKind::exact:
      return exact_lvalue(v.s0, v.s1, snr.rho, y);
    case LValueKind::maxlog:
      return maxlog_lvalue(v.s0, v.s1, snr.rho, y);
    case LValueKind::corrected: {
      const auto& d = *v.density;
      const double l = d.lvalue_map().eval(y);
      return d.log_eval(l, 1) - d.log_eval(l, 0);
    }
  }
  return 0.0;
}

double gmi_term(const BitView& v, Snr snr, LValueKind kind, double s, int b,
                double y) {
  const double l = lvalue_of(v, snr, kind, y);
  return log2_1p_exp_neg(s * (b ? 1.0 : -1.0) * l);
}

}  // namespace

std::uint64_t mc_draw(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double mc_uniform(std::uint64_t seed, std::uint64_t counter) {
  return (double(mc_draw(seed, counter) >> 11) + 0.5) * 0x1.0p-53;
}

double mc_gaussian(std::uint64_t seed, std::uint64_t counter) {
  const double u1 = mc_uniform(seed, 2 * counter);
  const double u2 = mc_uniform(seed, 2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

McEstimate mc_accumulate(std::uint64_t samples, std::uint64_t seed,
                         const std::function<double(std::uint64_t)>& integrand) {
  if (samples < 10000) {
    throw std::invalid_argument("mc_accumulate: need at least 10^4 samples");
  }
  const std::uint64_t n_blocks = (samples + kBlock - 1) / kBlock;
  std::vector<double> sums(n_blocks, 0.0), sq_sums(n_blocks, 0.0);
  parallel_for(n_blocks, [&](std::size_t blk) {
    const std::uint64_t lo = blk * kBlock;
    const std::uint64_t hi = std::min(samples, lo + kBlock);
    double s = 0.0, ss = 0.0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const double v = integrand(i);
      s += v;
      ss += v * v;
    }
    sums[blk] = s;
    sq_sums[blk] = ss;
  });
  double total = 0.0, total_sq = 0.0;
  for (std::uint64_t blk = 0; blk < n_blocks; ++blk) {
    total += sums[blk];
    total_sq += sq_sums[blk];
  }
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = total / double(samples);
  const double var =
      std::max(0.0, (total_sq - total * total / double(samples)) / double(samples - 1));
  est.std_error = std::sqrt(var / double(samples));
  return est;
}

McEstimate mc_gmi_objective(const Constellation& c, const Pattern& p, Snr snr,
                            LValueKind lvalue_kind, double s,
                            std::uint64_t samples, std::uint64_t seed) {
  const BitView v(c, p, snr, lvalue_kind != LValueKind::exact);
  const auto& pts = c.points();
  const std::uint64_t mask = std::uint64_t(c.size()) - 1;
  const double sigma = snr.noise_sigma();
  return mc_accumulate(samples, seed, [&](std::uint64_t i) {
    const std::uint64_t base = i * kDrawsPerSample;
    const std::uint64_t k = mc_draw(seed, base) & mask;
    const double y = pts[k] + sigma * mc_gaussian(seed, 2 * i + 1);
    return gmi_term(v, snr, lvalue_kind, s, v.bits[k], y);
  });
}

McEstimate mc_rate(const Constellation& c, const Pattern& p, Snr snr,
                   RateKind kind, std::uint64_t samples, std::uint64_t seed,
                   std::optional<double> s) {
  const bool need_density =
      kind == RateKind::mi_maxlog || kind == RateKind::gmi_maxlog ||
      kind == RateKind::mi_corrected;
  const BitView v(c, p, snr, need_density);
  const auto& pts = c.points();
  const std::uint64_t mask = std::uint64_t(c.size()) - 1;
  const double sigma = snr.noise_sigma();

  LValueKind lk = LValueKind::exact;
  bool gmi = false;
  switch (kind) {
    case RateKind::mi_exact:
      break;
    case RateKind::mi_maxlog:
      break;
    case RateKind::gmi_exact:
      gmi = true;
      lk = LValueKind::exact;
      break;
    case RateKind::gmi_maxlog:
      gmi = true;
      lk = LValueKind::maxlog;
      break;
    case RateKind::mi_corrected:
      gmi = true;
      lk = LValueKind::corrected;
      break;
    default:
      throw std::invalid_argument("mc_rate(pattern): labeling-level kind given");
  }
  if (gmi && !s.has_value()) {
    throw std::invalid_argument("mc_rate: GMI kinds need the scaling s");
  }

  McEstimate est = mc_accumulate(samples, seed, [&](std::uint64_t i) {
    const std::uint64_t base = i * kDrawsPerSample;
    const std::uint64_t k = mc_draw(seed, base) & mask;
    const int b = v.bits[k];
    const double y = pts[k] + sigma * mc_gaussian(seed, 2 * i + 1);
    if (gmi) return gmi_term(v, snr, lk, *s, b, y);
    if (kind == RateKind::mi_exact) return mi_exact_integrand(c, v, snr, b, y);
    return mi_maxlog_integrand(v, b, y);
  });
  if (gmi) est.mean = 1.0 - est.mean;
  return est;
}

McEstimate mc_rate(const Constellation& c, const Labeling& lab, Snr snr,
                   RateKind kind, LValueKind lvalue_kind,
                   std::uint64_t samples, std::uint64_t seed,
                   std::span<const double> s) {
  const int m = lab.bit_count();
  const bool need_density = lvalue_kind != LValueKind::exact;
  std::vector<BitView> rows;
  rows.reserve(std::size_t(m));
  for (const Pattern& row : lab.rows()) rows.emplace_back(c, row, snr, need_density);

  const auto& pts = c.points();
  const std::uint64_t mask = std::uint64_t(c.size()) - 1;
  const double sigma = snr.noise_sigma();

  std::vector<double> s_row(std::size_t(m), 0.0);
  switch (kind) {
    case RateKind::mi_bicm:
      if (lvalue_kind == LValueKind::corrected) {
        throw std::invalid_argument("mc_rate: mi_bicm needs exact or maxlog L-values");
      }
      break;
    case RateKind::gmi_bicm:
      if (s.size() != 1) {
        throw std::invalid_argument("mc_rate: gmi_bicm needs one common s");
      }
      s_row.assign(std::size_t(m), s[0]);
      break;
    case RateKind::gmi_harmonized:
      if (int(s.size()) != m) {
        throw std::invalid_argument("mc_rate: gmi_harmonized needs one s per row");
      }
      s_row.assign(s.begin(), s.end());
      break;
    default:
      throw std::invalid_argument("mc_rate(labeling): bit-level kind given");
  }

  McEstimate est = mc_accumulate(samples, seed, [&](std::uint64_t i) {
    const std::uint64_t base = i * kDrawsPerSample;
    const std::uint64_t k = mc_draw(seed, base) & mask;
    const double y = pts[k] + sigma * mc_gaussian(seed, 2 * i + 1);
    double acc = 0.0;
    for (int j = 0; j < m; ++j) {
      const BitView& v = rows[std::size_t(j)];
      const int b = v.bits[k];
      if (kind == RateKind::mi_bicm) {
        acc += lvalue_kind == LValueKind::exact
                   ? mi_exact_integrand(c, v, snr, b, y)
                   : mi_maxlog_integrand(v, b, y);
      } else {
        acc += gmi_term(v, snr, lvalue_kind, s_row[std::size_t(j)], b, y);
      }
    }
    return acc;
  });
  if (kind != RateKind::mi_bicm) est.mean = double(m) - est.mean;
  return est;
}

}  // namespace bicm
