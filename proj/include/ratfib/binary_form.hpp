#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratfib/rational.hpp"

namespace ratfib {

/// Homogeneous form sum_k c_k s^(d-k) t^k of degree d in two variables.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  /// Value at the projective point (s : t).
  Rational eval(const Rational& s, const Rational& t) const;
  /// Multiplicity of the root (s : t) = (0 : 1), i.e. the power of s dividing
  /// the form. Meaningless for the zero form.
  int multiplicity_at_s_zero() const;
  /// Form divided by s^k; requires divisibility.
  BinaryForm divide_by_s(int k) const;

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

/// Sylvester resultant of two forms of degrees m, n >= 1.
/// Zero iff they share a projective root.
Rational binary_resultant(const BinaryForm& f, const BinaryForm& g);

/// Greatest common divisor of two binary forms (up to a scalar), computed by
/// Euclid on the dehomogenizations in t/s together with the multiplicity of
/// the point s = 0. gcd(0, f) = f; gcd(0, 0) is the zero form.
BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g);

}  // namespace ratfib
