#pragma once

// Divisor classes on the moduli of pointed curves and test-curve pairings.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ratfib/rational.hpp"

namespace ratfib {

/// Coefficients in the basis (lambda, omega, delta_0, ..., delta_4).
inline constexpr std::size_t kClassRank = 7;
const std::array<std::string, kClassRank>& class_basis_names();

struct DivisorClass {
  std::array<Rational, kClassRank> c{};

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& s);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(DivisorClass a, const Rational& s) { return a *= s; }
  bool operator==(const DivisorClass&) const = default;
  std::string str() const;
};

/// Degrees of (lambda, omega, delta_0, ..., delta_4) on a 1-parameter family.
struct TestCurveProfile {
  std::array<Rational, kClassRank> d{};

  bool operator==(const TestCurveProfile&) const = default;
  std::string str() const;
};

/// W = 15 omega - lambda + 10 delta_1 + 6 delta_2 + 3 delta_3 + delta_4.
DivisorClass weierstrass_class();

/// Fixed curve of genus g with a moving point: omega = 2g - 2, rest 0.
TestCurveProfile moving_point_profile(int genus);

struct LefschetzReport {
  Rational chi_tot;
  Rational delta_0;
  Rational K2_tot;
  Rational kappa;
  Rational lambda;
  Rational omega;
  TestCurveProfile profile;
};

/// Pencil of genus-g curves on a surface with the given chi and K^2, with
/// `base_points` blown up; the section is the exceptional curve over a fixed
/// base point, of self-intersection `section_self_intersection`.
LefschetzReport lefschetz_profile(long chi_surface, long K2_surface, long fiber_genus, long base_points,
                                  long section_self_intersection = -1);

Rational class_eval(const DivisorClass& cls, const TestCurveProfile& profile);

/// The class O_X(m, n); pairs to 8m with F1 and n with F2.
struct PicXClass {
  Rational m;
  Rational n;

  bool operator==(const PicXClass&) const = default;
  std::string str() const;
};

PicXClass pullback_solve(const Rational& d1, const Rational& d2);

struct RayReport {
  bool collinear = false;
  /// c1 = ratio * c2, when defined.
  std::optional<Rational> ratio;
};

/// Proportional with nonnegative ratio; the zero class lies on every ray.
RayReport ray_collinear(const PicXClass& c1, const PicXClass& c2);

using IntersectionPair = std::array<Rational, 2>;

struct LoganReport {
  bool consistent = false;
  /// bn403 - (w + bn3).
  IntersectionPair discrepancy;
};

LoganReport logan_relation_check(const IntersectionPair& w, const IntersectionPair& bn3,
                                 const IntersectionPair& bn403);

struct NumerologyReport {
  long alpha = 0;
  bool is_divisor = false;
};

/// alpha = sum (a_i - i); divisor iff g + 1 = (r + 1)(g - d + r) + alpha.
NumerologyReport bn_divisor_numerology(long g, long r, long d, const std::vector<long>& z);

}  // namespace ratfib
