#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratfib/rational.hpp"

namespace ratfib {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored.
class MPoly {
 public:
  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly monomial(const Exponent& exp, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Smallest total degree of a term; -1 for the zero polynomial.
  int low_degree() const;
  bool is_homogeneous() const;

  Rational coeff(const Exponent& exp) const;
  void set(const Exponent& exp, const Rational& c);
  void add_term(const Exponent& exp, const Rational& c);

  Rational eval(std::span<const Rational> point) const;
  MPoly derivative(std::size_t var) const;
  /// Drops every term of total degree above `max_degree`.
  MPoly truncated(int max_degree) const;
  /// Exact division by var^power; nullopt when some term is not divisible.
  std::optional<MPoly> divide_by_variable(std::size_t var, int power) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Product truncated at total degree `max_degree`.
  static MPoly mul_truncated(const MPoly& a, const MPoly& b, int max_degree);

  std::string str(std::span<const std::string> names = {}) const;

 private:
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

}  // namespace ratfib
