#include "bicm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace bicm {

namespace {

// Eigenvalues of a symmetric tridiagonal matrix (diagonal d, subdiagonal e)
// together with the first component of each eigenvector, by implicit QL
// with shifts. d and q0 come back sorted by eigenvalue.
void tridiag_eigen_first_row(std::vector<double>& d, std::vector<double>& e,
                             std::vector<double>& q0) {
  const int n = int(d.size());
  q0.assign(std::size_t(n), 0.0);
  q0[0] = 1.0;
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    for (int iter = 0;; ++iter) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-16 * dd) break;
      }
      if (m == l) break;
      if (iter >= 50) throw std::runtime_error("tridiag_eigen: no convergence");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = q0[i + 1];
        q0[i + 1] = s * q0[i] + c * f;
        q0[i] = c * q0[i] - s * f;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> ds(static_cast<std::size_t>(n)), qs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ds[i] = d[idx[i]];
    qs[i] = q0[idx[i]];
  }
  d = std::move(ds);
  q0 = std::move(qs);
}

QuadRule make_gauss_hermite(int n) {
  // Golub-Welsch on the Jacobi matrix of the physicists' Hermite
  // polynomials: zero diagonal, off-diagonal beta_k = sqrt(k/2).
  std::vector<double> d(std::size_t(n), 0.0);
  std::vector<double> e(std::size_t(n - 1));
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(0.5 * k);
  std::vector<double> q0;
  tridiag_eigen_first_row(d, e, q0);
  QuadRule r;
  r.nodes = std::move(d);
  r.weights.resize(std::size_t(n));
  const double mu0 = std::sqrt(M_PI);
  for (int i = 0; i < n; ++i) r.weights[i] = mu0 * q0[i] * q0[i];
  // The rule is symmetric; tie the two halves together exactly.
  for (int i = 0; i < n / 2; ++i) {
    const double x = 0.5 * (r.nodes[n - 1 - i] - r.nodes[i]);
    r.nodes[n - 1 - i] = x;
    r.nodes[i] = -x;
    const double w = 0.5 * (r.weights[i] + r.weights[n - 1 - i]);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

QuadRule make_gauss_legendre(int n) {
  constexpr double kEps = 1e-15;
  QuadRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0;; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= kEps) break;
      if (it > 100) throw std::runtime_error("gauss_legendre: no convergence");
    }
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    r.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    r.weights[n - 1 - i] = r.weights[i];
  }
  return r;
}

const QuadRule& cached_rule(int order, QuadRule (*maker)(int),
                            std::map<int, QuadRule>& cache, std::mutex& mu) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, maker(order)).first;
  return it->second;
}

// Gauss 7 / Kronrod 15 pair on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double integral;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kKronrodWeights[7];
  double g = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double x = h * kKronrodNodes[i];
    const double fsum = f(c - x) + f(c + x);
    k += fsum * kKronrodWeights[i];
    if (i % 2 == 1) g += fsum * kGaussWeights[i / 2];
  }
  return {k * h, std::abs(k - g) * h};
}

double integrate_panel(const std::function<double(double)>& f, double a,
                       double b, double tol, int depth) {
  const PanelResult r = gk15(f, a, b);
  if (r.error <= tol || b - a < 1e-14 * (std::abs(a) + std::abs(b) + 1.0)) {
    return r.integral;
  }
  if (depth > 50) {
    throw std::runtime_error("integrate_adaptive: tolerance not reached on [" +
                             std::to_string(a) + ", " + std::to_string(b) +
                             "], err=" + std::to_string(r.error));
  }
  const double c = 0.5 * (a + b);
  return integrate_panel(f, a, c, 0.5 * tol, depth + 1) +
         integrate_panel(f, c, b, 0.5 * tol, depth + 1);
}

}  // namespace

const QuadRule& gauss_hermite(int order) {
  static std::map<int, QuadRule> cache;
  static std::mutex mu;
  if (order < 1) throw std::invalid_argument("gauss_hermite: order must be positive");
  return cached_rule(order, make_gauss_hermite, cache, mu);
}

const QuadRule& gauss_legendre(int order) {
  static std::map<int, QuadRule> cache;
  static std::mutex mu;
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
  return cached_rule(order, make_gauss_legendre, cache, mu);
}

double gauss_hermite_expectation(const std::function<double(double)>& f,
                                 double mean, double sigma, int order) {
  const QuadRule& rule = gauss_hermite(order);
  const double scale = sigma * std::sqrt(2.0);
  double acc = 0.0;
  for (int i = 0; i < order; ++i) {
    acc += rule.weights[i] * f(mean + scale * rule.nodes[i]);
  }
  return acc / std::sqrt(M_PI);
}

double gaussian_expectation_split(const std::function<double(double)>& f,
                                  double mean, double sigma,
                                  std::span<const double> kinks, int order,
                                  double window_sigmas) {
  const double lo = mean - window_sigmas * sigma;
  const double hi = mean + window_sigmas * sigma;
  std::vector<double> edges;
  edges.push_back(lo);
  for (double k : kinks) {
    if (k > lo && k < hi) edges.push_back(k);
  }
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());

  // Panels wider than ~3 sigma resolve the Gaussian factor poorly; subdivide.
  const double max_width = 3.0 * sigma;
  std::vector<double> panels;
  panels.push_back(edges.front());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const double a = edges[i - 1], b = edges[i];
    const int splits = std::max(1, int(std::ceil((b - a) / max_width)));
    for (int j = 1; j <= splits; ++j) panels.push_back(a + (b - a) * j / splits);
  }

  const QuadRule& rule = gauss_legendre(order);
  const double inv_norm = 1.0 / (sigma * std::sqrt(2.0 * M_PI));
  double acc = 0.0;
  for (std::size_t i = 1; i < panels.size(); ++i) {
    const double a = panels[i - 1], b = panels[i];
    if (b <= a) continue;
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double panel = 0.0;
    for (int j = 0; j < order; ++j) {
      const double y = mid + half * rule.nodes[j];
      const double t = (y - mean) / sigma;
      panel += rule.weights[j] * std::exp(-0.5 * t * t) * f(y);
    }
    acc += panel * half;
  }
  return acc * inv_norm;
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, std::span<const double> breakpoints,
                          double abs_tol, double rel_tol) {
  if (!(b > a)) return 0.0;
  std::vector<double> edges;
  edges.push_back(a);
  for (double x : breakpoints) {
    if (x > a && x < b) edges.push_back(x);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());

  double rough = 0.0;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    rough += gk15(f, edges[i - 1], edges[i]).integral;
  }
  const double tol = std::max(abs_tol, rel_tol * std::abs(rough));

  double acc = 0.0;
  const double total = b - a;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const double piece_tol = tol * std::max(1e-3, (edges[i] - edges[i - 1]) / total);
    acc += integrate_panel(f, edges[i - 1], edges[i], piece_tol, 0);
  }
  return acc;
}

GoldenResult golden_section_min(const std::function<double(double)>& f,
                                double lo, double hi, double rel_tol) {
  if (!(hi > lo)) throw std::invalid_argument("golden_section_min: empty interval");
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo, b = hi;
  double c = b - (b - a) * kInvPhi;
  double d = a + (b - a) * kInvPhi;
  double fc = f(c), fd = f(d);
  while (b - a > rel_tol * (std::abs(c) + std::abs(d)) + 1e-14) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * kInvPhi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * kInvPhi;
      fd = f(d);
    }
  }
  const double arg = fc < fd ? c : d;
  const double val = std::min(fc, fd);
  const bool boundary = (arg - lo) < 1e-6 * (hi - lo) || (hi - arg) < 1e-6 * (hi - lo);
  return {arg, val, boundary};
}

}  // namespace bicm
