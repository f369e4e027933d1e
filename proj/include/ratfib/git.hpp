#pragma once

// Hilbert-Mumford computations for the diagonal torus of PGL(5).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ratfib/curve5.hpp"
#include "ratfib/hull.hpp"
#include "ratfib/phi5.hpp"

namespace ratfib {

/// Weights (w0, ..., w4) of a diagonal 1-parameter subgroup; sum zero.
struct OnePS {
  std::array<long, 5> w{};

  static OnePS make(const std::array<long, 5>& weights);
  std::string str() const;
  bool operator==(const OnePS&) const = default;
};

/// The subgroup with weights (-2, -1, 0, 1, 2).
OnePS standard_one_ps();

/// O_X(a, b): degree a on P^4, degree b on the Grassmannian factor.
struct Linearization {
  long a = 3;
  long b = 2;

  static Linearization make(long a, long b);
};

/// Torus states of a pointed curve. A point coordinate x_i has state e_i;
/// a Plucker coordinate on monomials {x_i0 x_j0, x_i1 x_j1, x_i2 x_j2} has
/// state -(e_i0 + e_j0 + ... + e_j2). Combined states are a * point + b * plucker.
struct StateSet {
  std::vector<LatticePoint> point;
  /// One entry per nonzero Plucker coordinate, parallel to the index sums.
  std::vector<LatticePoint> plucker;
  std::vector<LatticePoint> combined;
  /// Index sums i0 + j0 + ... + j2 of the nonzero Plucker coordinates.
  std::vector<int> plucker_index_sums;
};

/// Nonzero 3x3 minors of the net's coefficient matrix, keyed by the three
/// monomial slots.
std::vector<std::pair<std::array<std::size_t, 3>, Rational>> plucker_coordinates(const Net& net);

StateSet plucker_states(const PointedCurve5& curve, const Linearization& lin);

long pairing(const OnePS& l, const LatticePoint& s);
/// min over states of <lambda, s>.
long mu(const std::vector<LatticePoint>& states, const OnePS& l);

enum class Stability { Stable, StrictlySemistable, Unstable };
std::string stability_name(Stability s);

struct TorusClassification {
  Stability stability = Stability::Unstable;
  /// Unstable only: mu(destabilizing) > 0, attained at `witness`.
  std::optional<OnePS> destabilizing;
  LatticePoint witness;
};

/// Classification for the standard maximal torus only.
TorusClassification torus_classify(const std::vector<LatticePoint>& states);

/// Limit as t -> 0 of lambda(t) acting by x_i -> t^{w_i} x_i. The net is
/// returned in reduced echelon form over the monomial order (0,4), (1,4),
/// (2,4), (3,4), (4,4), (0,3), ..., (0,0).
PointedCurve5 flat_limit(const PointedCurve5& curve, const OnePS& l);

/// Puts a net into reduced echelon form over the flat-limit monomial order.
Net canonical_net(const Net& net);

struct RescaleResult {
  PointedCurve5 canonical;
  M04Point c;
};

/// Torus normalization of a limit x0x4 + A x1x3 + B x2^2, x1x4 + C x2x3,
/// x2x4 - x3^2 at (0:0:0:0:1), with invariant c = C A / B.
RescaleResult torus_rescale(const PointedCurve5& limit);

/// Nets with the normal-form vanishing pattern in which the listed pivot
/// coefficient a_{1,0,4}, a_{2,1,4} or a_{3,2,4} (alpha = 1, 2, 3) is zero.
struct PivotCertificate {
  int alpha = 1;
  TorusClassification result;
};

/// Torus classification of `curve` (normal-form coordinates) under `lin`.
PivotCertificate pivot_certificate(const PointedCurve5& curve, int alpha, const Linearization& lin);

}  // namespace ratfib
