#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "bicm/constellation.hpp"
#include "bicm/lvalue.hpp"
#include "bicm/rates.hpp"

namespace bicm {

// Counter-based generator: output i of stream `seed` is a pure function of
// (seed, i), so sample ranges can be sharded across threads and replayed
// exactly.
std::uint64_t mc_draw(std::uint64_t seed, std::uint64_t counter);
double mc_uniform(std::uint64_t seed, std::uint64_t counter);  // in (0, 1)
double mc_gaussian(std::uint64_t seed, std::uint64_t counter);  // N(0, 1)

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Sample mean and standard error of integrand(i) over i in [0, samples),
// accumulated in fixed-size blocks so the result is independent of the
// thread count. samples must be >= 10^4.
McEstimate mc_accumulate(std::uint64_t samples, std::uint64_t seed,
                         const std::function<double(std::uint64_t)>& integrand);

// E[log2(1 + e^{-s*Bcheck*L})] for the bit channel of pattern p.
McEstimate mc_gmi_objective(const Constellation& c, const Pattern& p, Snr snr,
                            LValueKind lvalue_kind, double s,
                            std::uint64_t samples, std::uint64_t seed);

// Bit-level rate estimate. GMI kinds evaluate the objective at the supplied
// s (normally the quadrature minimizer) so the check is decoupled from the
// minimization; MI kinds need no s.
McEstimate mc_rate(const Constellation& c, const Pattern& p, Snr snr,
                   RateKind kind, std::uint64_t samples, std::uint64_t seed,
                   std::optional<double> s = std::nullopt);

// Labeling-level rate estimate. gmi_bicm takes one common s, gmi_harmonized
// one s per row; mi_bicm ignores s.
McEstimate mc_rate(const Constellation& c, const Labeling& lab, Snr snr,
                   RateKind kind, LValueKind lvalue_kind,
                   std::uint64_t samples, std::uint64_t seed,
                   std::span<const double> s = {});

}  // namespace bicm
