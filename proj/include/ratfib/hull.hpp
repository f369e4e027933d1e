#pragma once

#include <optional>
#include <vector>

#include "ratfib/linalg.hpp"

namespace ratfib {

using LatticePoint = std::vector<long>;

/// Outcome of the exact feasibility problem {A x = b, x >= 0}.
struct FeasibilityResult {
  bool feasible = false;
  Vec solution;     // set when feasible
  Vec certificate;  // when infeasible: y with y^T A >= 0 and y^T b < 0
};

/// Two-phase-free simplex (phase I only) with Bland's rule, in exact
/// arithmetic. Terminates on degenerate inputs.
FeasibilityResult feasible_nonnegative(const Matrix& a, const Vec& b);

struct HullMembership {
  bool contains_zero = false;
  /// When zero is outside: integer functional with <separator, s> > 0 for
  /// every input point.
  LatticePoint separator;
};

/// Is the zero vector a convex combination of `points`?
HullMembership zero_in_hull(const std::vector<LatticePoint>& points);

/// Is zero in the interior of conv(points) (relative to the full ambient
/// space)? Requires the points to span the ambient space.
bool zero_in_interior(const std::vector<LatticePoint>& points);

/// Scales a rational vector to the primitive integer vector on its ray.
LatticePoint primitive_integer(const Vec& v);

}  // namespace ratfib
