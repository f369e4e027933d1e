#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratfib/rational.hpp"

namespace ratfib {

/// Univariate power series c0 + c1 s + ... + cN s^N, exact through order N.
///
/// Binary operations on series of different orders truncate to the smaller
/// order: nothing beyond the common precision is ever reported as known.
class TruncSeries {
 public:
  /// Zero series known through order `order`.
  explicit TruncSeries(int order);
  TruncSeries(std::vector<Rational> coeffs, int order);

  static TruncSeries constant(const Rational& c, int order);
  /// The local parameter s itself.
  static TruncSeries parameter(int order);

  int order() const { return order_; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or nullopt when the series is
  /// zero through order N (its valuation is then at least N + 1).
  std::optional<int> valuation() const;

  TruncSeries truncated(int order) const;
  TruncSeries inverse() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
  int order_;
};

}  // namespace ratfib
