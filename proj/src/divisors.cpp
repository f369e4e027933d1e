#include "ratfib/divisors.hpp"

#include <sstream>

#include "ratfib/error.hpp"

namespace ratfib {

const std::array<std::string, kClassRank>& class_basis_names() {
  static const std::array<std::string, kClassRank> names{"lambda",  "omega",   "delta_0", "delta_1",
                                                          "delta_2", "delta_3", "delta_4"};
  return names;
}

namespace {

std::string join(const std::array<Rational, kClassRank>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < kClassRank; ++i) os << (i ? " " : "") << class_basis_names()[i] << "=" << v[i];
  return os.str();
}

}  // namespace

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  for (std::size_t i = 0; i < kClassRank; ++i) c[i] += o.c[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  for (std::size_t i = 0; i < kClassRank; ++i) c[i] -= o.c[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
  for (auto& x : c) x *= s;
  return *this;
}

std::string DivisorClass::str() const { return join(c); }
std::string TestCurveProfile::str() const { return join(d); }

DivisorClass weierstrass_class() { return DivisorClass{{-1, 15, 0, 10, 6, 3, 1}}; }

TestCurveProfile moving_point_profile(int genus) {
  if (genus < 2) throw Error(ErrorCode::PreconditionViolation, "genus must be at least 2");
  TestCurveProfile p;
  p.d[1] = 2 * genus - 2;
  return p;
}

LefschetzReport lefschetz_profile(long chi_surface, long K2_surface, long fiber_genus, long base_points,
                                  long section_self_intersection) {
  if (fiber_genus < 2) throw Error(ErrorCode::PreconditionViolation, "fiber genus must be at least 2");
  if (base_points < 0) throw Error(ErrorCode::PreconditionViolation, "base point count must be nonnegative");
  LefschetzReport r;
  r.chi_tot = Rational(chi_surface + base_points);
  // chi(total) = chi(P^1) chi(fiber) + #singular fibers.
  r.delta_0 = r.chi_tot - Rational(2 * (2 - 2 * fiber_genus));
  r.K2_tot = Rational(K2_surface - base_points);
  // Relative dualizing sheaf: K_tot - f^*K_{P^1}.
  r.kappa = r.K2_tot + Rational(4 * (2 * fiber_genus - 2));
  Rational sum = r.kappa + r.delta_0;
  if ((sum / Rational(12)).denominator() != 1) {
    throw Error(ErrorCode::NonIntegralLambda,
                "kappa + delta_0 = " + sum.str() + " is not divisible by 12");
  }
  r.lambda = sum / Rational(12);
  r.omega = Rational(-section_self_intersection);
  r.profile.d[0] = r.lambda;
  r.profile.d[1] = r.omega;
  r.profile.d[2] = r.delta_0;
  return r;
}

Rational class_eval(const DivisorClass& cls, const TestCurveProfile& profile) {
  Rational s;
  for (std::size_t i = 0; i < kClassRank; ++i) s += cls.c[i] * profile.d[i];
  return s;
}

std::string PicXClass::str() const { return "O_X(" + m.str() + "," + n.str() + ")"; }

PicXClass pullback_solve(const Rational& d1, const Rational& d2) { return PicXClass{d1 / Rational(8), d2}; }

RayReport ray_collinear(const PicXClass& c1, const PicXClass& c2) {
  RayReport r;
  const bool z1 = c1.m.is_zero() && c1.n.is_zero();
  const bool z2 = c2.m.is_zero() && c2.n.is_zero();
  if (z1) {
    r.collinear = true;
    r.ratio = Rational(0);
    return r;
  }
  if (z2) {
    r.collinear = true;
    return r;
  }
  if (c1.m * c2.n != c1.n * c2.m) return r;
  Rational ratio = c2.m.is_zero() ? c1.n / c2.n : c1.m / c2.m;
  if (ratio.sign() < 0) return r;
  r.collinear = true;
  r.ratio = ratio;
  return r;
}

LoganReport logan_relation_check(const IntersectionPair& w, const IntersectionPair& bn3,
                                 const IntersectionPair& bn403) {
  LoganReport r;
  for (std::size_t i = 0; i < 2; ++i) r.discrepancy[i] = bn403[i] - (w[i] + bn3[i]);
  r.consistent = r.discrepancy[0].is_zero() && r.discrepancy[1].is_zero();
  return r;
}

NumerologyReport bn_divisor_numerology(long g, long r, long d, const std::vector<long>& z) {
  if (g < 0 || r < 0) throw Error(ErrorCode::PreconditionViolation, "g and r must be nonnegative");
  if (z.size() != static_cast<std::size_t>(r + 1)) {
    throw Error(ErrorCode::PreconditionViolation, "ramification sequence must have r + 1 entries");
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] < 0 || (i > 0 && z[i] <= z[i - 1])) {
      throw Error(ErrorCode::PreconditionViolation, "ramification sequence must be nonnegative and increasing");
    }
  }
  NumerologyReport rep;
  for (std::size_t i = 0; i < z.size(); ++i) rep.alpha += z[i] - static_cast<long>(i);
  rep.is_divisor = g + 1 == (r + 1) * (g - d + r) + rep.alpha;
  return rep;
}

}  // namespace ratfib
