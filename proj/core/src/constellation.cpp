#include "bicm/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bicm {

namespace {

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
  int m = 0;
  while (n > 1) {
    n >>= 1;
    ++m;
  }
  return m;
}

}  // namespace

Constellation::Constellation(std::vector<double> points) : points_(std::move(points)) {
  if (!is_power_of_two(points_.size())) {
    throw std::invalid_argument("Constellation: point count must be a power of two, >= 2");
  }
  for (std::size_t k = 1; k < points_.size(); ++k) {
    if (!(points_[k] > points_[k - 1])) {
      throw std::invalid_argument("Constellation: points must be strictly increasing");
    }
  }
  m_ = log2_exact(points_.size());
  double energy = 0.0;
  for (double a : points_) energy += a * a;
  energy /= double(points_.size());
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw std::invalid_argument("Constellation: points must have positive finite energy");
  }
  const double scale = 1.0 / std::sqrt(energy);
  for (double& a : points_) a *= scale;
}

Constellation make_equally_spaced_pam(int m) {
  if (m < 1 || m > 8) {
    throw std::invalid_argument("make_equally_spaced_pam: m must be in [1, 8]");
  }
  const int M = 1 << m;
  // Levels +-(2k-1)d with (1/M) sum a^2 = d^2 (M^2-1)/3 = 1.
  const double d = std::sqrt(3.0 / (double(M) * M - 1.0));
  std::vector<double> pts(M);
  for (int k = 0; k < M; ++k) pts[k] = d * (2 * k + 1 - M);
  return Constellation(std::move(pts));
}

Constellation normalize(std::vector<double> points) {
  return Constellation(std::move(points));
}

std::optional<double> symmetry_center(const Constellation& c) {
  const auto& a = c.points();
  const int M = c.size();
  const double y0 = 0.5 * (a[0] + a[std::size_t(M - 1)]);
  for (int k = 0; k < M; ++k) {
    if (std::abs(a[std::size_t(k)] + a[std::size_t(M - 1 - k)] - 2.0 * y0) > 1e-12) {
      return std::nullopt;
    }
  }
  return y0;
}

Pattern::Pattern(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (!is_power_of_two(bits_.size())) {
    throw std::invalid_argument("Pattern: length must be a power of two, >= 2");
  }
  std::size_t weight = 0;
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("Pattern: entries must be 0 or 1");
    weight += b;
  }
  if (weight * 2 != bits_.size()) {
    throw std::invalid_argument("Pattern: Hamming weight must be M/2");
  }
}

Pattern reflect(const Pattern& p) {
  std::vector<std::uint8_t> bits(p.bits().rbegin(), p.bits().rend());
  return Pattern(std::move(bits));
}

Pattern invert(const Pattern& p) {
  std::vector<std::uint8_t> bits = p.bits();
  for (auto& b : bits) b = std::uint8_t(1 - b);
  return Pattern(std::move(bits));
}

Pattern canonical_pattern(const Pattern& p) {
  Pattern best = p;
  for (const Pattern& cand : {reflect(p), invert(p), invert(reflect(p))}) {
    if (cand.bits() < best.bits()) best = cand;
  }
  return best;
}

bool are_equivalent(const Pattern& p, const Pattern& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("are_equivalent: pattern lengths differ");
  }
  return canonical_pattern(p) == canonical_pattern(q);
}

std::vector<double> subconstellation(const Constellation& c, const Pattern& p,
                                     int bit) {
  if (p.size() != c.size()) {
    throw std::invalid_argument("subconstellation: pattern/constellation size mismatch");
  }
  std::vector<double> sub;
  sub.reserve(std::size_t(c.size() / 2));
  for (int k = 0; k < c.size(); ++k) {
    if (p[k] == bit) sub.push_back(c.points()[std::size_t(k)]);
  }
  return sub;
}

Labeling::Labeling(std::vector<Pattern> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("Labeling: needs at least one row");
  const int M = rows_.front().size();
  if (M != (1 << rows_.size())) {
    throw std::invalid_argument("Labeling: needs m rows of length 2^m");
  }
  for (const Pattern& r : rows_) {
    if (r.size() != M) throw std::invalid_argument("Labeling: row length mismatch");
  }
  index_of_label_.assign(std::size_t(M), -1);
  for (int k = 0; k < M; ++k) {
    const std::uint32_t label = column_label(k);
    if (index_of_label_[label] != -1) {
      throw std::invalid_argument("Labeling: columns must be distinct");
    }
    index_of_label_[label] = k;
  }
}

std::uint32_t Labeling::column_label(int k) const {
  std::uint32_t v = 0;
  for (const Pattern& r : rows_) v = (v << 1) | r[k];
  return v;
}

int Labeling::symbol_index(std::uint32_t label) const {
  return index_of_label_[label];
}

Labeling brgc(int m) {
  if (m < 1) throw std::invalid_argument("brgc: m must be >= 1");
  const int M = 1 << m;
  std::vector<Pattern> rows;
  rows.reserve(std::size_t(m));
  for (int j = 0; j < m; ++j) {
    std::vector<std::uint8_t> bits(std::size_t(M), 0);
    for (int k = 0; k < M; ++k) {
      const std::uint32_t gray = std::uint32_t(k) ^ (std::uint32_t(k) >> 1);
      bits[std::size_t(k)] = std::uint8_t((gray >> (m - 1 - j)) & 1u);
    }
    rows.emplace_back(std::move(bits));
  }
  return Labeling(std::move(rows));
}

Labeling nbc(int m) {
  if (m < 1) throw std::invalid_argument("nbc: m must be >= 1");
  const int M = 1 << m;
  std::vector<Pattern> rows;
  rows.reserve(std::size_t(m));
  for (int j = 0; j < m; ++j) {
    std::vector<std::uint8_t> bits(std::size_t(M), 0);
    for (int k = 0; k < M; ++k) {
      bits[std::size_t(k)] = std::uint8_t((std::uint32_t(k) >> (m - 1 - j)) & 1u);
    }
    rows.emplace_back(std::move(bits));
  }
  return Labeling(std::move(rows));
}

}  // namespace bicm
