#include "ratfib/phi5.hpp"

#include "ratfib/error.hpp"

namespace ratfib {

namespace {

Rational bracket(const P1Point& p, const P1Point& q) { return p.x * q.y - p.y * q.x; }

}  // namespace

std::optional<Rational> cross_ratio(const P1Point& a, const P1Point& b, const P1Point& c, const P1Point& d) {
  if (bracket(a, b).is_zero() || bracket(b, c).is_zero() || bracket(a, c).is_zero()) return std::nullopt;
  Rational den = bracket(c, d) * bracket(b, a);
  if (den.is_zero()) return std::nullopt;
  return bracket(a, d) * bracket(b, c) / den;
}

std::string label_name(BoundaryLabel l) {
  switch (l) {
    case BoundaryLabel::RE_CT:
      return "{R,E}|{C,T}";
    case BoundaryLabel::RT_CE:
      return "{R,T}|{C,E}";
    case BoundaryLabel::RC_ET:
      return "{R,C}|{E,T}";
  }
  return "?";
}

M04Point M04Point::interior(const Rational& l) {
  if (l.is_zero() || l == Rational(1)) {
    throw Error(ErrorCode::PreconditionViolation, "interior lambda must avoid 0 and 1");
  }
  M04Point p;
  p.kind = Kind::Interior;
  p.lambda = l;
  return p;
}

M04Point M04Point::boundary(BoundaryLabel l) {
  M04Point p;
  p.kind = Kind::Boundary;
  p.label = l;
  return p;
}

M04Point M04Point::degenerate(std::string why) {
  M04Point p;
  p.kind = Kind::Degenerate;
  p.reason = std::move(why);
  return p;
}

M04Point M04Point::from_lambda(const Rational& l) {
  if (l.is_zero()) return boundary(BoundaryLabel::RT_CE);
  if (l == Rational(1)) return boundary(BoundaryLabel::RC_ET);
  return interior(l);
}

bool M04Point::operator==(const M04Point& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Interior:
      return lambda == o.lambda;
    case Kind::Boundary:
      return label == o.label;
    case Kind::Degenerate:
      return true;
  }
  return false;
}

std::string M04Point::str() const {
  switch (kind) {
    case Kind::Interior:
      return "interior lambda=" + lambda.str();
    case Kind::Boundary:
      return "boundary " + label_name(label);
    case Kind::Degenerate:
      return "degenerate " + reason;
  }
  return "?";
}

SurfaceAndHyperplane surface_and_hyperplane(const NormalForm5& nf) {
  SurfaceAndHyperplane out;
  out.surface.q1 = nf.quadrics[0];
  out.surface.q2 = nf.quadrics[1];
  out.hyperplane = Vec{1, 0, 0, 0, 0};
  return out;
}

namespace {

MPoly eval_quadric(const Quadric& q, const std::array<MPoly, 5>& x, int degree) {
  MPoly acc(2);
  for (std::size_t k = 0; k < kQuadricMonomials; ++k) {
    const Rational& c = q.coeffs()[k];
    if (c.is_zero()) continue;
    auto [i, j] = quadric_monomials()[k];
    acc += MPoly::mul_truncated(x[i], x[j], degree) * c;
  }
  return acc;
}

}  // namespace

PlaneCurveGerm residual_curve(const SurfaceZ& z, const Vec& hyperplane, int degree) {
  if (hyperplane != Vec{1, 0, 0, 0, 0}) {
    throw Error(ErrorCode::PreconditionViolation, "residual_curve expects the hyperplane x0 = 0");
  }
  if (degree < 3) throw Error(ErrorCode::PreconditionViolation, "germ degree must be at least 3");
  const Rational& pivot = z.q2.a(1, 4);
  if (pivot.is_zero()) throw Error(ErrorCode::EliminationFailure, "residual_curve: x1 pivot of Q2 vanishes");

  std::array<MPoly, 5> x{MPoly(2), MPoly(2), MPoly::variable(2, 0), MPoly::variable(2, 1), MPoly::constant(2, 1)};
  // Solve Q2 = 0 for x1 as a power series in (x2, x3).
  bool converged = false;
  for (int iter = 0; iter <= degree + 2 && !converged; ++iter) {
    MPoly step = eval_quadric(z.q2, x, degree) * pivot.inverse();
    converged = step.is_zero();
    x[1] -= step;
  }
  if (!converged) throw Error(ErrorCode::EliminationFailure, "residual_curve: x1 elimination did not converge");

  PlaneCurveGerm g;
  g.degree = degree;
  g.full = eval_quadric(z.q1, x, degree);
  auto quotient = g.full.divide_by_variable(0, 1);
  if (!quotient) throw Error(ErrorCode::EliminationFailure, "residual_curve: germ is not divisible by x2");
  g.residual = *quotient;
  return g;
}

FourPoints blowup_four_points(const PlaneCurveGerm& germ, const Branch& branch) {
  if (branch.order() < 5) throw Error(ErrorCode::PreconditionViolation, "branch order must be at least 5");
  const auto& x2 = branch.x[2];
  if (!x2[0].is_zero() || !x2[1].is_zero()) {
    throw Error(ErrorCode::DegenerateConfiguration, "blowup: branch is not tangent to x2 = 0");
  }
  FourPoints pts;
  pts.t = P1Point{0, 1};
  pts.e = P1Point{1, 0};
  if (x2[2].is_zero()) {
    throw Error(ErrorCode::DegenerateConfiguration, "blowup: C meets the second exceptional line at T");
  }
  pts.c = P1Point{x2[2], 1};

  if (!germ.r(0, 0).is_zero()) {
    throw Error(ErrorCode::DegenerateConfiguration, "blowup: R does not pass through p");
  }
  if (!germ.r(0, 1).is_zero()) {
    throw Error(ErrorCode::DegenerateConfiguration, "blowup: R is transverse to T_pC");
  }
  // x2 = u' x3^2: the strict transform meets the line at c10 u' + c02 = 0.
  const Rational c10 = germ.r(1, 0);
  const Rational c02 = germ.r(0, 2);
  if (c10.is_zero() && c02.is_zero()) {
    throw Error(ErrorCode::DegenerateConfiguration,
                "blowup: strict transform of R does not meet the second exceptional line in a single point");
  }
  pts.r = P1Point{-c02, c10};
  return pts;
}

M04Point classify_four_points(const FourPoints& pts) {
  if (pts.t == pts.c || pts.t == pts.e || pts.c == pts.e) {
    return M04Point::degenerate("reference points T, C, E collide");
  }
  if (pts.r == pts.e) return M04Point::boundary(BoundaryLabel::RE_CT);
  return M04Point::from_lambda(*cross_ratio(pts.t, pts.c, pts.e, pts.r));
}

M04Point phi5_closed_form(const NormalForm5& nf) {
  Rational num = nf.a(2, 2, 3) * nf.a(1, 1, 3);
  const Rational& den = nf.a(1, 2, 2);
  if (num.is_zero() && den.is_zero()) return M04Point::degenerate("a_{2,2,3} a_{1,1,3} = a_{1,2,2} = 0");
  if (den.is_zero()) return M04Point::boundary(BoundaryLabel::RE_CT);
  return M04Point::from_lambda(num / den);
}

M04Point phi5_blowup(const NormalForm5& nf) {
  auto sh = surface_and_hyperplane(nf);
  auto germ = residual_curve(sh.surface, sh.hyperplane);
  auto branch = branch_expand(nf, kDefaultBranchOrder);
  return classify_four_points(blowup_four_points(germ, branch));
}

M04Point phi5(const PointedCurve5& curve) { return phi5_blowup(normalize(curve)); }

std::pair<BinaryForm, BinaryForm> tangent_pencil_forms(const NormalForm5& nf) {
  const Vec e2{0, 0, 1, 0, 0};
  const Vec e3{0, 0, 0, 1, 0};
  auto restrict = [&](const Quadric& q) {
    BinaryForm f({q.eval(e2), q.polar(e2, e3) * Rational(2), q.eval(e3)});
    if (f.multiplicity_at_s_zero() < 1) {
      throw Error(ErrorCode::PreconditionViolation, "quadric does not contain the tangent line");
    }
    return f.divide_by_s(1);
  };
  return {restrict(nf.quadrics[0]), restrict(nf.quadrics[1])};
}

namespace {

// A nonzero linear or constant form has a root off {s = 0}.
bool has_root_off_t(const BinaryForm& f) {
  if (f.is_zero()) return true;
  return f.divide_by_s(f.multiplicity_at_s_zero()).degree() >= 1;
}

}  // namespace

BnFlags detect_bn_divisors(const NormalForm5& nf) {
  BnFlags flags;
  flags.weierstrass = is_weierstrass(nf);

  auto [f1, f2] = tangent_pencil_forms(nf);
  if (f1.is_zero() || f2.is_zero()) {
    flags.bn4_03 = has_root_off_t(f1.is_zero() ? f2 : f1);
  } else if (f1.degree() >= 1 && f2.degree() >= 1 && binary_resultant(f1, f2).is_zero()) {
    flags.bn4_03 = has_root_off_t(binary_gcd(f1, f2));
  }

  auto sh = surface_and_hyperplane(nf);
  auto germ = residual_curve(sh.surface, sh.hyperplane);
  flags.bn6_024 = germ.full.divide_by_variable(0, 2).has_value();
  return flags;
}

}  // namespace ratfib
