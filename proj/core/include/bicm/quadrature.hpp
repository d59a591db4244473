#pragma once

#include <functional>
#include <span>
#include <vector>

namespace bicm {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Hermite rule for weight e^{-x^2} on (-inf, inf). Cached per order.
const QuadRule& gauss_hermite(int order);

// Gauss-Legendre rule on [-1, 1]. Cached per order.
const QuadRule& gauss_legendre(int order);

// E[f(Y)] for Y ~ N(mean, sigma^2) when f is smooth on all of R.
double gauss_hermite_expectation(const std::function<double(double)>& f,
                                 double mean, double sigma, int order);

// E[f(Y)] for Y ~ N(mean, sigma^2) when f is only piecewise smooth; the
// integral is split at the given kink locations (and the Gaussian is
// truncated at +-window_sigmas, with wide pieces subdivided) so each
// Gauss-Legendre panel sees a smooth integrand.
double gaussian_expectation_split(const std::function<double(double)>& f,
                                  double mean, double sigma,
                                  std::span<const double> kinks, int order,
                                  double window_sigmas = 8.5);

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b], splitting
// first at the interior breakpoints. Throws std::runtime_error if the
// tolerance cannot be reached.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, std::span<const double> breakpoints,
                          double abs_tol = 1e-10, double rel_tol = 1e-10);

struct GoldenResult {
  double arg;
  double value;
  bool at_boundary;
};

// Golden-section minimization of a convex scalar function on [lo, hi].
GoldenResult golden_section_min(const std::function<double(double)>& f,
                                double lo, double hi, double rel_tol = 1e-8);

}  // namespace bicm
