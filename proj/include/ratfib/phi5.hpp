#pragma once

// The map from pointed genus-5 curves to the moduli of 4-pointed lines.

#include <optional>
#include <string>

#include "ratfib/binary_form.hpp"
#include "ratfib/curve5.hpp"

namespace ratfib {

/// Point of P^1 in homogeneous coordinates; affine value x/y.
struct P1Point {
  Rational x;
  Rational y = 1;

  bool operator==(const P1Point& o) const { return x * o.y == y * o.x; }
  std::string str() const { return "(" + x.str() + ":" + y.str() + ")"; }
};

/// Cross ratio: the Mobius coordinate sending a, b, c to 0, 1, infinity,
/// evaluated at d. Returns nullopt when d = c or the reference points collide.
std::optional<Rational> cross_ratio(const P1Point& a, const P1Point& b, const P1Point& c, const P1Point& d);

/// Partitions of {R, C, E, T} labelling the boundary points of M04.
enum class BoundaryLabel { RE_CT, RT_CE, RC_ET };
std::string label_name(BoundaryLabel l);

struct M04Point {
  enum class Kind { Interior, Boundary, Degenerate };
  Kind kind = Kind::Degenerate;
  Rational lambda;  // Interior only
  BoundaryLabel label = BoundaryLabel::RC_ET;  // Boundary only
  std::string reason;  // Degenerate only

  static M04Point interior(const Rational& l);
  static M04Point boundary(BoundaryLabel l);
  static M04Point degenerate(std::string why);
  /// Interior for lambda outside {0, 1}; the matching boundary otherwise.
  static M04Point from_lambda(const Rational& l);

  bool operator==(const M04Point& o) const;
  std::string str() const;
};

/// Del Pezzo quartic through T_pC.
struct SurfaceZ {
  Quadric q1;
  Quadric q2;
};

struct SurfaceAndHyperplane {
  SurfaceZ surface;
  /// Linear form cutting out the osculating hyperplane.
  Vec hyperplane;
};

SurfaceAndHyperplane surface_and_hyperplane(const NormalForm5& nf);

inline constexpr int kGermDegree = 6;

/// Plane curve germ in (x2, x3) on the chart x0 = 0, x4 = 1.
struct PlaneCurveGerm {
  MPoly full{2};      // H n Z projected, truncated at `degree`
  MPoly residual{2};  // full / x2, truncated at degree - 1
  int degree = kGermDegree;

  /// Coefficient of x2^i x3^j in the residual factor.
  Rational r(int i, int j) const { return residual.coeff({i, j}); }
};

PlaneCurveGerm residual_curve(const SurfaceZ& z, const Vec& hyperplane, int degree = kGermDegree);

/// Points on the second exceptional line in the coordinate u' (x2 = u' x3^2).
struct FourPoints {
  P1Point r;
  P1Point e;
  P1Point t;
  P1Point c;
};

FourPoints blowup_four_points(const PlaneCurveGerm& germ, const Branch& branch);

/// lambda = CR(T -> 0, C -> 1, E -> infinity; R).
M04Point classify_four_points(const FourPoints& pts);

M04Point phi5_closed_form(const NormalForm5& nf);
M04Point phi5(const PointedCurve5& curve);
/// Same pipeline from an already normalized curve.
M04Point phi5_blowup(const NormalForm5& nf);

/// Restrictions of Q1, Q2 to tangent directions s e2 + t e3 of T_pS at p,
/// each with one factor s (the T_pC direction) divided out.
std::pair<BinaryForm, BinaryForm> tangent_pencil_forms(const NormalForm5& nf);

struct BnFlags {
  bool weierstrass = false;
  bool bn4_03 = false;
  bool bn6_024 = false;
};

BnFlags detect_bn_divisors(const NormalForm5& nf);

}  // namespace ratfib
