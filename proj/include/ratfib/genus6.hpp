#pragma once

// Quintic del Pezzo surface as P^2 blown up in four points, and pointed
// genus-6 curves in |-2K|.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ratfib/binary_form.hpp"
#include "ratfib/linalg.hpp"
#include "ratfib/mpoly.hpp"
#include "ratfib/phi5.hpp"

namespace ratfib {

struct QuinticDP {
  std::array<Vec, 4> base;

  /// Throws GeneralPositionFailure for repeated or collinear base points.
  static QuinticDP make(const std::array<Vec, 4>& base);
};

/// The standard frame (1:0:0), (0:1:0), (0:0:1), (1:1:1).
QuinticDP standard_quintic_dp();

/// E_i or the strict transform L_ij of the line through base points i, j
/// (0-based indices; labels print 1-based).
struct NegCurve {
  enum class Kind { Exceptional, Line };
  Kind kind = Kind::Exceptional;
  int i = 0;
  int j = 0;
  /// Line only: linear form vanishing on base points i and j.
  Vec line;

  /// Class in the basis (h, e_1, ..., e_4).
  std::array<long, 5> divisor_class() const;
  std::string label() const;
  bool operator==(const NegCurve& o) const { return kind == o.kind && i == o.i && j == o.j; }
};

long intersection(const NegCurve& a, const NegCurve& b);

std::vector<NegCurve> neg_curves(const QuinticDP& y);

/// The 5 sets of 4 pairwise disjoint (-1)-curves.
std::vector<std::array<NegCurve, 4>> blow_down_sets(const QuinticDP& y);

/// A point of the surface: a P^2 point off the base points, or a point of
/// E_i given by the direction towards another P^2 point.
struct SurfacePoint {
  Vec plane;
  std::optional<int> exceptional;  // base index i
  Vec direction;                   // exceptional only

  static SurfacePoint in_plane(const Vec& p) { return SurfacePoint{p, std::nullopt, {}}; }
  static SurfacePoint on_exceptional(int i, const Vec& towards) { return SurfacePoint{{}, i, towards}; }
};

std::optional<NegCurve> on_neg_curve(const QuinticDP& y, const SurfacePoint& p);

struct PointedCurve6 {
  QuinticDP surface;
  MPoly sextic{3};
  Vec point;
};

/// Throws PreconditionViolation unless the sextic is double at every base
/// point and passes through the point; BasePointInput if the point is a
/// base point.
void check_curve6(const PointedCurve6& c);

struct D6Report {
  bool in_d6 = false;
  std::optional<NegCurve> witness;
};

D6Report d6_membership(const PointedCurve6& c);

/// Residual intersection of the sextic with a (-1)-curve, after removing
/// the base points: a binary form of degree -2K . curve = 2.
/// Lines are parametrized by s p_i + t p_j.
BinaryForm neg_curve_residual(const PointedCurve6& c, const NegCurve& curve);

struct M05OrbitPoint {
  enum class Kind { Interior, Boundary };
  Kind kind = Kind::Interior;
  /// Interior: lexicographically minimal (lambda_3, lambda_4) over labelings.
  std::array<Rational, 2> config;
  /// Boundary: label-free stratum, "2|3" or "2|1|2".
  std::string shape;
  /// Boundary: labelled collision pattern (base points 1..4, marked point p).
  std::string pattern;

  bool operator==(const M05OrbitPoint& o) const;
  std::string str() const;
};

/// Canonical orbit of 5 distinct points of P^1 under S_5 and PGL(2).
std::array<Rational, 2> canonical_configuration(const std::array<P1Point, 5>& pts);

/// The unique conic through the base points and p, as coefficients of
/// x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
Vec conic_through(const QuinticDP& y, const Vec& p);

M05OrbitPoint phi6(const PointedCurve6& c);

/// Basis of the plane sextics double at the base points and through p.
std::vector<MPoly> sextics_through(const QuinticDP& y, const Vec& p);

/// Applies x -> g x to base points and point, and F -> F(g^{-1} x).
PointedCurve6 transform(const PointedCurve6& c, const Matrix& g);

}  // namespace ratfib
