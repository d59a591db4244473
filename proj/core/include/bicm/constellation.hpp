#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bicm {

// One-dimensional M-PAM constellation, stored normalized to unit average
// energy. Points are strictly increasing and M is a power of two.
class Constellation {
 public:
  // Normalizes the given amplitudes by a single positive scale factor so
  // that (1/M) * sum a_k^2 = 1. Throws std::invalid_argument if the points
  // are not strictly increasing or the count is not a power of two.
  explicit Constellation(std::vector<double> points);

  const std::vector<double>& points() const { return points_; }
  int size() const { return int(points_.size()); }
  int bits_per_symbol() const { return m_; }

 private:
  std::vector<double> points_;
  int m_;
};

// Equally spaced PAM with 2^m points, unit energy. 1 <= m <= 8.
Constellation make_equally_spaced_pam(int m);

// Normalizes raw amplitudes into a Constellation (same contract as the
// Constellation constructor).
Constellation normalize(std::vector<double> points);

// Center y0 such that a_k = -a_{M-k+1} + 2*y0 for all k (within 1e-12),
// or nullopt if the constellation is not symmetric.
std::optional<double> symmetry_center(const Constellation& c);

// One row of a labeling: a length-M binary vector with Hamming weight M/2,
// splitting the constellation into two subconstellations.
class Pattern {
 public:
  explicit Pattern(std::vector<std::uint8_t> bits);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  int size() const { return int(bits_.size()); }
  std::uint8_t operator[](int k) const { return bits_[std::size_t(k)]; }

  bool operator==(const Pattern& other) const { return bits_ == other.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

Pattern reflect(const Pattern& p);
Pattern invert(const Pattern& p);

// Lexicographically smallest member of {p, refl(p), inv(p), inv(refl(p))}.
Pattern canonical_pattern(const Pattern& p);

// True iff p and q are related by reflections and/or inversions.
// Throws std::invalid_argument on length mismatch.
bool are_equivalent(const Pattern& p, const Pattern& q);

// Points of c labeled with `bit` under pattern p.
std::vector<double> subconstellation(const Constellation& c, const Pattern& p,
                                     int bit);

// m x M binary labeling matrix with all-distinct columns.
class Labeling {
 public:
  explicit Labeling(std::vector<Pattern> rows);

  const std::vector<Pattern>& rows() const { return rows_; }
  const Pattern& row(int j) const { return rows_[std::size_t(j)]; }
  int bit_count() const { return int(rows_.size()); }
  int symbol_count() const { return rows_.empty() ? 0 : rows_.front().size(); }

  // Binary label of column k, row 0 as the most significant bit.
  std::uint32_t column_label(int k) const;
  // Column index carrying the given label.
  int symbol_index(std::uint32_t label) const;

 private:
  std::vector<Pattern> rows_;
  std::vector<int> index_of_label_;
};

// Binary reflected Gray code / natural binary code labelings for 2^m points.
Labeling brgc(int m);
Labeling nbc(int m);

}  // namespace bicm
