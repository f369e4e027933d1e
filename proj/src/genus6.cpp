#include "ratfib/genus6.hpp"

#include <algorithm>
#include <numeric>

#include "ratfib/error.hpp"

namespace ratfib {

namespace {

bool same_point(const Vec& a, const Vec& b) { return !is_zero(a) && !is_zero(b) && in_span({a}, b); }

Vec cross(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational det3(const Vec& a, const Vec& b, const Vec& c) { return dot(cross(a, b), c); }

std::string set_str(std::vector<std::string> items) {
  std::string s = "{";
  for (std::size_t k = 0; k < items.size(); ++k) s += (k ? "," : "") + items[k];
  return s + "}";
}

/// F(subs_0, subs_1, subs_2).
MPoly compose(const MPoly& f, const std::array<MPoly, 3>& subs) {
  const std::size_t n = subs[0].nvars();
  MPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    MPoly term = MPoly::constant(n, c);
    for (std::size_t k = 0; k < 3; ++k)
      for (int r = 0; r < e[k]; ++r) term = term * subs[k];
    out += term;
  }
  return out;
}

std::array<MPoly, 3> linear_subs(std::size_t nvars, const std::vector<Vec>& pts) {
  std::array<MPoly, 3> subs{MPoly(nvars), MPoly(nvars), MPoly(nvars)};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t v = 0; v < pts.size(); ++v)
      subs[k] += MPoly::variable(nvars, v) * pts[v][k];
  return subs;
}

std::vector<Exponent> monomials_of_degree(int d) {
  std::vector<Exponent> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

}  // namespace

QuinticDP QuinticDP::make(const std::array<Vec, 4>& base) {
  for (const auto& b : base) {
    if (b.size() != 3) throw Error(ErrorCode::DimensionMismatch, "base points need 3 coordinates");
    if (is_zero(b)) throw Error(ErrorCode::GeneralPositionFailure, "base point is zero");
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (same_point(base[i], base[j])) {
        throw Error(ErrorCode::GeneralPositionFailure,
                    "base points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (det3(base[i], base[j], base[k]).is_zero()) {
          throw Error(ErrorCode::GeneralPositionFailure, "base points " + std::to_string(i + 1) + ", " +
                                                              std::to_string(j + 1) + ", " +
                                                              std::to_string(k + 1) + " are collinear");
        }
  QuinticDP y;
  y.base = base;
  return y;
}

QuinticDP standard_quintic_dp() { return QuinticDP::make({Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}, Vec{1, 1, 1}}); }

std::array<long, 5> NegCurve::divisor_class() const {
  std::array<long, 5> c{};
  if (kind == Kind::Exceptional) {
    c[static_cast<std::size_t>(i) + 1] = 1;
  } else {
    c[0] = 1;
    c[static_cast<std::size_t>(i) + 1] = -1;
    c[static_cast<std::size_t>(j) + 1] = -1;
  }
  return c;
}

std::string NegCurve::label() const {
  if (kind == Kind::Exceptional) return "E" + std::to_string(i + 1);
  return "L" + std::to_string(i + 1) + std::to_string(j + 1);
}

long intersection(const NegCurve& a, const NegCurve& b) {
  auto x = a.divisor_class();
  auto y = b.divisor_class();
  long s = x[0] * y[0];
  for (std::size_t k = 1; k < 5; ++k) s -= x[k] * y[k];
  return s;
}

std::vector<NegCurve> neg_curves(const QuinticDP& y) {
  std::vector<NegCurve> out;
  for (int i = 0; i < 4; ++i) out.push_back(NegCurve{NegCurve::Kind::Exceptional, i, i, {}});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      out.push_back(NegCurve{NegCurve::Kind::Line, i, j, cross(y.base[i], y.base[j])});
  return out;
}

std::vector<std::array<NegCurve, 4>> blow_down_sets(const QuinticDP& y) {
  auto curves = neg_curves(y);
  std::vector<std::array<NegCurve, 4>> out;
  const std::size_t n = curves.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          std::array<NegCurve, 4> s{curves[a], curves[b], curves[c], curves[d]};
          bool disjoint = true;
          for (std::size_t u = 0; u < 4 && disjoint; ++u)
            for (std::size_t v = u + 1; v < 4 && disjoint; ++v) disjoint = intersection(s[u], s[v]) == 0;
          if (disjoint) out.push_back(s);
        }
  return out;
}

std::optional<NegCurve> on_neg_curve(const QuinticDP& y, const SurfacePoint& p) {
  if (p.exceptional) {
    int i = *p.exceptional;
    if (i < 0 || i > 3) throw Error(ErrorCode::PreconditionViolation, "exceptional index out of range");
    if (p.direction.size() != 3 || same_point(p.direction, y.base[i]) || is_zero(p.direction)) {
      throw Error(ErrorCode::PreconditionViolation, "exceptional point needs a direction off the base point");
    }
    return NegCurve{NegCurve::Kind::Exceptional, i, i, {}};
  }
  if (p.plane.size() != 3 || is_zero(p.plane)) throw Error(ErrorCode::DimensionMismatch, "point needs 3 coordinates");
  for (int i = 0; i < 4; ++i) {
    if (same_point(p.plane, y.base[i])) {
      throw Error(ErrorCode::BasePointInput,
                  "point is base point " + std::to_string(i + 1) + "; give a point of E" + std::to_string(i + 1));
    }
  }
  for (const auto& c : neg_curves(y)) {
    if (c.kind == NegCurve::Kind::Line && dot(c.line, p.plane).is_zero()) return c;
  }
  return std::nullopt;
}

void check_curve6(const PointedCurve6& c) {
  const MPoly& f = c.sextic;
  if (f.nvars() != 3 || f.is_zero() || !f.is_homogeneous() || f.degree() != 6) {
    throw Error(ErrorCode::PreconditionViolation, "sextic must be a nonzero form of degree 6 in 3 variables");
  }
  if (c.point.size() != 3 || is_zero(c.point)) throw Error(ErrorCode::DimensionMismatch, "point needs 3 coordinates");
  for (int i = 0; i < 4; ++i) {
    if (same_point(c.point, c.surface.base[i])) {
      throw Error(ErrorCode::BasePointInput, "marked point is base point " + std::to_string(i + 1));
    }
    const Vec& b = c.surface.base[i];
    for (std::size_t k = 0; k < 3; ++k) {
      if (!f.derivative(k).eval(b).is_zero()) {
        throw Error(ErrorCode::PreconditionViolation,
                    "sextic is not singular at base point " + std::to_string(i + 1));
      }
    }
  }
  if (!f.eval(c.point).is_zero()) throw Error(ErrorCode::PreconditionViolation, "marked point is not on the sextic");
}

D6Report d6_membership(const PointedCurve6& c) {
  check_curve6(c);
  D6Report r;
  r.witness = on_neg_curve(c.surface, SurfacePoint::in_plane(c.point));
  r.in_d6 = r.witness.has_value();
  return r;
}

BinaryForm neg_curve_residual(const PointedCurve6& c, const NegCurve& curve) {
  check_curve6(c);
  const auto& base = c.surface.base;
  if (curve.kind == NegCurve::Kind::Line) {
    MPoly g = compose(c.sextic, linear_subs(2, {base[curve.i], base[curve.j]}));
    std::vector<Rational> coeffs(7);
    for (int k = 0; k <= 6; ++k) coeffs[k] = g.coeff({6 - k, k});
    // Double at t = 0 (base point i) and at s = 0 (base point j).
    if (!coeffs[0].is_zero() || !coeffs[1].is_zero() || !coeffs[5].is_zero() || !coeffs[6].is_zero()) {
      throw Error(ErrorCode::PreconditionViolation, "sextic restricted to the line is not double at the base points");
    }
    return BinaryForm({coeffs[2], coeffs[3], coeffs[4]});
  }
  // Tangent cone at base point i, on directions s q1 + t q2.
  std::vector<Vec> others;
  for (int k = 0; k < 4; ++k)
    if (k != curve.i) others.push_back(base[k]);
  MPoly g = compose(c.sextic, linear_subs(3, {base[curve.i], others[0], others[1]}));
  return BinaryForm({g.coeff({4, 2, 0}), g.coeff({4, 1, 1}), g.coeff({4, 0, 2})});
}

bool M05OrbitPoint::operator==(const M05OrbitPoint& o) const {
  if (kind != o.kind) return false;
  return kind == Kind::Interior ? config == o.config : shape == o.shape;
}

std::string M05OrbitPoint::str() const {
  if (kind == Kind::Interior) return "interior (" + config[0].str() + "," + config[1].str() + ")";
  return "boundary " + shape + " " + pattern;
}

std::array<Rational, 2> canonical_configuration(const std::array<P1Point, 5>& pts) {
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  std::optional<std::array<Rational, 2>> best;
  do {
    auto c3 = cross_ratio(pts[perm[0]], pts[perm[1]], pts[perm[2]], pts[perm[3]]);
    auto c4 = cross_ratio(pts[perm[0]], pts[perm[1]], pts[perm[2]], pts[perm[4]]);
    if (!c3 || !c4) throw Error(ErrorCode::DegenerateConfiguration, "configuration points are not distinct");
    std::array<Rational, 2> cand{*c3, *c4};
    if (!best || cand < *best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

Vec conic_through(const QuinticDP& y, const Vec& p) {
  auto monos = monomials_of_degree(2);
  Matrix m(5, monos.size());
  for (std::size_t r = 0; r < 5; ++r) {
    const Vec& x = r < 4 ? y.base[r] : p;
    for (std::size_t k = 0; k < monos.size(); ++k) m(r, k) = MPoly::monomial(monos[k], 1).eval(x);
  }
  auto ker = mat_kernel(m);
  if (ker.size() != 1) throw Error(ErrorCode::DegenerateConfiguration, "conic through the five points is not unique");
  return ker[0];
}

M05OrbitPoint phi6(const PointedCurve6& c) {
  check_curve6(c);
  const auto& base = c.surface.base;
  Vec q = conic_through(c.surface, c.point);
  // Monomial order x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
  Matrix s{{q[0], q[1] / Rational(2), q[2] / Rational(2)},
           {q[1] / Rational(2), q[3], q[4] / Rational(2)},
           {q[2] / Rational(2), q[4] / Rational(2), q[5]}};
  M05OrbitPoint out;
  if (determinant(s).is_zero()) {
    out.kind = M05OrbitPoint::Kind::Boundary;
    std::vector<NegCurve> lines;
    for (const auto& nc : neg_curves(c.surface))
      if (nc.kind == NegCurve::Kind::Line && dot(nc.line, c.point).is_zero()) lines.push_back(nc);
    auto name = [](int k) { return std::to_string(k + 1); };
    if (lines.size() == 1) {
      const auto& l = lines[0];
      std::vector<std::string> rest;
      for (int k = 0; k < 4; ++k)
        if (k != l.i && k != l.j) rest.push_back(name(k));
      out.shape = "2|3";
      out.pattern = set_str(rest) + "|" + set_str({name(l.i), name(l.j), "p"});
    } else if (lines.size() == 2) {
      out.shape = "2|1|2";
      out.pattern = set_str({name(lines[0].i), name(lines[0].j)}) + "|{p}|" +
                    set_str({name(lines[1].i), name(lines[1].j)});
    } else {
      throw Error(ErrorCode::DegenerateConfiguration, "singular conic without a line through two base points");
    }
    return out;
  }

  // Parametrize the conic by lines through the first base point.
  auto pencil = mat_kernel(Matrix::from_rows({base[0]}));
  auto param = [&](const Vec& x) { return P1Point{dot(pencil[1], x), -dot(pencil[0], x)}; };
  Vec tangent = s * base[0];
  Vec other;
  for (auto& k : mat_kernel(Matrix::from_rows({tangent})))
    if (!in_span({base[0]}, k)) {
      other = k;
      break;
    }
  std::array<P1Point, 5> pts{param(other), param(base[1]), param(base[2]), param(base[3]), param(c.point)};
  out.config = canonical_configuration(pts);
  return out;
}

std::vector<MPoly> sextics_through(const QuinticDP& y, const Vec& p) {
  auto monos = monomials_of_degree(6);
  std::vector<Vec> rows;
  for (const auto& b : y.base) {
    for (std::size_t v = 0; v < 3; ++v) {
      Vec row;
      for (const auto& e : monos) row.push_back(MPoly::monomial(e, 1).derivative(v).eval(b));
      rows.push_back(row);
    }
  }
  Vec at_p;
  for (const auto& e : monos) at_p.push_back(MPoly::monomial(e, 1).eval(p));
  rows.push_back(at_p);
  std::vector<MPoly> out;
  for (const auto& k : mat_kernel(Matrix::from_rows(rows))) {
    MPoly f(3);
    for (std::size_t i = 0; i < monos.size(); ++i) f.add_term(monos[i], k[i]);
    out.push_back(f);
  }
  return out;
}

PointedCurve6 transform(const PointedCurve6& c, const Matrix& g) {
  auto inv = inverse(g);
  if (!inv) throw Error(ErrorCode::PreconditionViolation, "transformation is singular");
  std::array<Vec, 4> base;
  for (std::size_t i = 0; i < 4; ++i) base[i] = g * c.surface.base[i];
  PointedCurve6 out;
  out.surface = QuinticDP::make(base);
  out.point = g * c.point;
  std::vector<Vec> cols;
  for (std::size_t v = 0; v < 3; ++v) cols.push_back(inv->col(v));
  out.sextic = compose(c.sextic, linear_subs(3, cols));
  return out;
}

}  // namespace ratfib
