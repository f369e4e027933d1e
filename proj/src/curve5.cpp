#include "ratfib/curve5.hpp"

#include <random>
#include <sstream>

#include "ratfib/error.hpp"

namespace ratfib {

const std::array<std::pair<int, int>, kQuadricMonomials>& quadric_monomials() {
  static const auto table = [] {
    std::array<std::pair<int, int>, kQuadricMonomials> t{};
    std::size_t k = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) t[k++] = {i, j};
    return t;
  }();
  return table;
}

std::size_t monomial_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j > 4) throw Error(ErrorCode::PreconditionViolation, "variable index out of range");
  // Row i of the upper triangle starts after 5 + 4 + ... + (5 - i + 1) slots.
  return static_cast<std::size_t>(i * 5 - i * (i - 1) / 2 + (j - i));
}

Quadric Quadric::from_mpoly(const MPoly& p) {
  if (p.nvars() != kP4) throw Error(ErrorCode::DimensionMismatch, "quadric needs 5 variables");
  Quadric q;
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    int first = -1;
    int second = -1;
    for (int k = 0; k < 5; ++k) {
      deg += e[k];
      for (int r = 0; r < e[k]; ++r) (first < 0 ? first : second) = k;
    }
    if (deg != 2) throw Error(ErrorCode::PreconditionViolation, "polynomial is not a quadratic form");
    q.set(first, second, c);
  }
  return q;
}

MPoly Quadric::to_mpoly() const {
  MPoly p(kP4);
  for (std::size_t k = 0; k < kQuadricMonomials; ++k) {
    auto [i, j] = quadric_monomials()[k];
    Exponent e(kP4, 0);
    e[i] += 1;
    e[j] += 1;
    p.add_term(e, a_[k]);
  }
  return p;
}

bool Quadric::is_zero() const {
  for (const auto& c : a_)
    if (!c.is_zero()) return false;
  return true;
}

Rational Quadric::eval(const Vec& x) const { return polar(x, x); }

Rational Quadric::polar(const Vec& x, const Vec& y) const {
  if (x.size() != kP4 || y.size() != kP4) throw Error(ErrorCode::DimensionMismatch, "point length");
  Rational s;
  for (std::size_t k = 0; k < kQuadricMonomials; ++k) {
    if (a_[k].is_zero()) continue;
    auto [i, j] = quadric_monomials()[k];
    if (i == j) {
      s += a_[k] * x[i] * y[i];
    } else {
      s += a_[k] * (x[i] * y[j] + x[j] * y[i]) / Rational(2);
    }
  }
  return s;
}

Vec Quadric::gradient(const Vec& x) const {
  Vec g(kP4);
  for (std::size_t k = 0; k < kQuadricMonomials; ++k) {
    if (a_[k].is_zero()) continue;
    auto [i, j] = quadric_monomials()[k];
    if (i == j) {
      g[i] += a_[k] * x[i] * Rational(2);
    } else {
      g[i] += a_[k] * x[j];
      g[j] += a_[k] * x[i];
    }
  }
  return g;
}

Quadric Quadric::substitute(const Matrix& m) const {
  if (m.rows() != kP4 || m.cols() != kP4) throw Error(ErrorCode::DimensionMismatch, "substitution matrix shape");
  Quadric out;
  for (std::size_t k = 0; k < kQuadricMonomials; ++k) {
    auto [i, j] = quadric_monomials()[k];
    Vec ci = m.col(i);
    Vec cj = m.col(j);
    out.a_[k] = i == j ? polar(ci, ci) : polar(ci, cj) * Rational(2);
  }
  return out;
}

Quadric& Quadric::operator+=(const Quadric& o) {
  for (std::size_t k = 0; k < kQuadricMonomials; ++k) a_[k] += o.a_[k];
  return *this;
}

Quadric& Quadric::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

std::string Quadric::str() const {
  static const std::array<std::string, 5> names{"x0", "x1", "x2", "x3", "x4"};
  return to_mpoly().str(names);
}

Quadric combine(const Net& net, const Vec& weights) {
  Quadric q;
  for (std::size_t b = 0; b < 3; ++b) {
    if (!weights.at(b).is_zero()) q += net[b] * weights[b];
  }
  return q;
}

Matrix net_matrix(const Net& net) {
  Matrix m(3, kQuadricMonomials);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < kQuadricMonomials; ++k) m(r, k) = net[r].coeffs()[k];
  return m;
}

PointedCurve5 transform(const PointedCurve5& curve, const Matrix& m) {
  auto inv = inverse(m);
  if (!inv) throw Error(ErrorCode::PreconditionViolation, "coordinate change is singular");
  PointedCurve5 out;
  for (std::size_t a = 0; a < 3; ++a) out.net[a] = curve.net[a].substitute(m);
  out.point = *inv * curve.point;
  return out;
}

std::string ValidationReport::failure() const {
  if (!point_nonzero) return "point_nonzero";
  if (!independent) return "net_independence";
  if (!incident) return "point_incidence";
  if (!smooth_at_point) return "smoothness_at_point";
  return {};
}

namespace {

Matrix jacobian_at(const Net& net, const Vec& p) {
  return Matrix::from_rows({net[0].gradient(p), net[1].gradient(p), net[2].gradient(p)});
}

}  // namespace

ValidationReport validate(const PointedCurve5& curve) {
  ValidationReport r;
  if (curve.point.size() != kP4) throw Error(ErrorCode::DimensionMismatch, "point must have 5 coordinates");
  r.point_nonzero = !is_zero(curve.point);
  r.independent = rank(net_matrix(curve.net)) == 3;
  for (const auto& q : curve.net)
    if (!q.eval(curve.point).is_zero()) r.incident = false;
  r.smooth_at_point = r.point_nonzero && rank(jacobian_at(curve.net, curve.point)) == 3;
  return r;
}

PointedCurve5 NormalForm5::as_curve() const {
  PointedCurve5 c;
  c.net = quadrics;
  c.point = Vec{0, 0, 0, 0, 1};
  return c;
}

std::string normal_form_violation(const Net& q) {
  for (int alpha = 1; alpha <= 3; ++alpha) {
    for (auto [i, j] : quadric_monomials()) {
      if (i + j > 3 + alpha && !q[alpha - 1].a(i, j).is_zero()) {
        return "a_{" + std::to_string(alpha) + "," + std::to_string(i) + "," + std::to_string(j) +
               "} must vanish";
      }
    }
  }
  if (q[0].a(0, 4) != Rational(1)) return "a_{1,0,4} must be 1";
  if (q[1].a(1, 4) != Rational(1)) return "a_{2,1,4} must be 1";
  if (q[2].a(2, 4) != Rational(1)) return "a_{3,2,4} must be 1";
  if (q[2].a(3, 3) != Rational(-1)) return "a_{3,3,3} must be -1";
  return {};
}

NormalForm5 make_normal_form(const Net& quadrics) {
  if (auto v = normal_form_violation(quadrics); !v.empty()) {
    throw Error(ErrorCode::PreconditionViolation, "not a normal form: " + v);
  }
  NormalForm5 nf;
  nf.quadrics = quadrics;
  return nf;
}

namespace {

Vec unit(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = 1;
  return v;
}

}  // namespace

NormalForm5 normalize(const PointedCurve5& curve) {
  auto report = validate(curve);
  if (!report.ok()) {
    throw Error(ErrorCode::PreconditionViolation, "curve fails validation: " + report.failure());
  }
  const Vec& p = curve.point;
  const Net& net = curve.net;

  // Tangent direction: the Jacobian kernel is span(p, v).
  Vec v;
  for (auto& k : mat_kernel(jacobian_at(net, p))) {
    if (!in_span({p}, k)) {
      v = k;
      break;
    }
  }
  std::size_t piv = kP4 - 1;
  while (p[piv].is_zero()) --piv;
  Rational shift = v[piv] / p[piv];
  for (std::size_t i = 0; i < kP4; ++i) v[i] -= shift * p[i];

  // V: quadrics of the net containing the tangent line.
  Matrix restrict_line(1, 3);
  for (std::size_t a = 0; a < 3; ++a) restrict_line(0, a) = net[a].eval(v);
  if (is_zero(restrict_line.row(0))) {
    throw Error(ErrorCode::GenericityFailure,
                "normalize/tangent-line: every quadric of the net contains the tangent line");
  }
  auto vbasis = mat_kernel(restrict_line);
  Quadric p1 = combine(net, vbasis[0]);
  Quadric p2 = combine(net, vbasis[1]);

  // Tangent plane of S = P1 n P2 at p, and a direction w in it off the line.
  auto plane = mat_kernel(Matrix::from_rows({p1.gradient(p), p2.gradient(p)}));
  Vec w;
  for (auto& k : plane) {
    if (!in_span({p, v}, k)) {
      w = k;
      break;
    }
  }

  // The quadric of V restricting to a double line on the plane has
  // B(w, v) = 0; when every member does, keep the first basis element.
  Matrix second_line(1, 2);
  second_line(0, 0) = p1.polar(w, v);
  second_line(0, 1) = p2.polar(w, v);
  Vec w1 = vbasis[0];
  Vec w2 = vbasis[1];
  if (!is_zero(second_line.row(0))) {
    Vec c = mat_kernel(second_line)[0];
    Vec other = in_span({c}, unit(2, 0)) ? unit(2, 1) : unit(2, 0);
    Vec n1(3);
    Vec n2(3);
    for (std::size_t b = 0; b < 3; ++b) {
      n1[b] = c[0] * vbasis[0][b] + c[1] * vbasis[1][b];
      n2[b] = other[0] * vbasis[0][b] + other[1] * vbasis[1][b];
    }
    w1 = n1;
    w2 = n2;
  }
  Vec w3;
  for (std::size_t b = 0; b < 3; ++b) {
    if (!in_span(vbasis, unit(3, b))) {
      w3 = unit(3, b);
      break;
    }
  }
  const Quadric q1 = combine(net, w1);
  const Quadric q3 = combine(net, w3);

  // Coordinates: e1 in ker(grad Q1) off T_pS, e0 completes the basis.
  const Vec g1 = q1.gradient(p);
  Vec e1;
  for (auto& k : mat_kernel(Matrix::from_rows({g1}))) {
    if (!in_span({w, v, p}, k)) {
      e1 = k;
      break;
    }
  }
  Vec e0;
  for (std::size_t k = 0; k < kP4; ++k) {
    if (independent({unit(kP4, k), e1, w, v, p})) {
      e0 = unit(kP4, k);
      break;
    }
  }
  const Rational g3w = dot(q3.gradient(p), w);
  if (g3w.is_zero()) {
    throw Error(ErrorCode::GenericityFailure, "normalize/plane-adaptation: a_{3,2,4} vanishes");
  }
  const Rational scale_w = -q3.eval(v) / g3w;
  Vec e2 = w;
  for (auto& x : e2) x *= scale_w;

  NormalForm5 nf;
  nf.coordinate_change = Matrix::from_columns({e0, e1, e2, v, p});
  const std::array<Vec, 3> weights{w1, w2, w3};
  const std::array<std::pair<int, int>, 3> pivots{{{0, 4}, {1, 4}, {2, 4}}};
  for (std::size_t a = 0; a < 3; ++a) {
    Quadric q = combine(net, weights[a]).substitute(nf.coordinate_change);
    const Rational& pivot = q.a(pivots[a].first, pivots[a].second);
    if (pivot.is_zero()) {
      throw Error(ErrorCode::GenericityFailure,
                  "normalize/scaling: a_{" + std::to_string(a + 1) + "," +
                      std::to_string(pivots[a].first) + ",4} vanishes");
    }
    Rational inv = pivot.inverse();
    q *= inv;
    nf.quadrics[a] = q;
    for (std::size_t b = 0; b < 3; ++b) nf.net_change(a, b) = weights[a][b] * inv;
  }
  if (auto bad = normal_form_violation(nf.quadrics); !bad.empty()) {
    throw Error(ErrorCode::GenericityFailure, "normalize: result violates normal form (" + bad + ")");
  }
  return nf;
}

namespace {

/// Q(X) for series coordinates X.
TruncSeries eval_series(const Quadric& q, const std::array<TruncSeries, 5>& x) {
  TruncSeries s(x[0].order());
  for (std::size_t k = 0; k < kQuadricMonomials; ++k) {
    const Rational& c = q.coeffs()[k];
    if (c.is_zero()) continue;
    auto [i, j] = quadric_monomials()[k];
    s += (x[i] * x[j]) * c;
  }
  return s;
}

}  // namespace

Branch branch_expand(const NormalForm5& nf, int order) {
  if (order < 1) throw Error(ErrorCode::PreconditionViolation, "branch order must be positive");
  // Linear part of (Q1, Q2, Q3) in (x0, x1, x2) at p: unit lower triangular.
  Matrix lin(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < 3; ++i) lin(a, i) = nf.quadrics[a].a(static_cast<int>(i), 4);
  Matrix lin_inv = *inverse(lin);

  std::array<TruncSeries, 5> x{TruncSeries(order), TruncSeries(order), TruncSeries(order),
                               TruncSeries::parameter(order), TruncSeries::constant(1, order)};
  // Each step gains at least one order, since every nonlinear term carries
  // s or a product of two branch coordinates.
  for (int iter = 0; iter <= order + 2; ++iter) {
    std::array<TruncSeries, 3> residual{eval_series(nf.quadrics[0], x), eval_series(nf.quadrics[1], x),
                                        eval_series(nf.quadrics[2], x)};
    bool done = true;
    for (std::size_t i = 0; i < 3; ++i) {
      TruncSeries step(order);
      for (std::size_t a = 0; a < 3; ++a) {
        if (!lin_inv(i, a).is_zero()) step += residual[a] * lin_inv(i, a);
      }
      if (step.valuation()) done = false;
      x[i] -= step;
    }
    if (done) {
      Branch b;
      for (std::size_t i = 0; i < 3; ++i) b.x[i] = x[i];
      return b;
    }
  }
  throw Error(ErrorCode::EliminationFailure, "branch expansion did not converge");
}

std::string VanishingSequence::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < 5; ++i) os << (i ? "," : "") << (exact[i] ? "" : ">=") << b[i];
  os << ")";
  return os.str();
}

VanishingSequence vanishing_sequence(const Branch& branch, int certify_through) {
  const int n = branch.order();
  std::vector<TruncSeries> rest{branch.x[0], branch.x[1], branch.x[2], TruncSeries::parameter(n),
                                TruncSeries::constant(1, n)};
  VanishingSequence seq;
  std::size_t filled = 0;
  while (!rest.empty()) {
    std::size_t best = rest.size();
    int best_val = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      auto v = rest[i].valuation();
      if (v && (best == rest.size() || *v < best_val)) {
        best = i;
        best_val = *v;
      }
    }
    if (best == rest.size()) {
      // Remaining sections vanish through the truncation order.
      if (n + 1 <= certify_through) {
        throw Error(ErrorCode::InsufficientPrecision,
                    "vanishing order not certified at truncation " + std::to_string(n));
      }
      for (; filled < 5; ++filled) {
        seq.b[filled] = n + 1;
        seq.exact[filled] = false;
      }
      break;
    }
    TruncSeries pivot = rest[best];
    rest.erase(rest.begin() + static_cast<long>(best));
    seq.b[filled++] = best_val;
    for (auto& r : rest) {
      auto v = r.valuation();
      if (v && *v == best_val) r -= pivot * (r[best_val] / pivot[best_val]);
    }
  }
  return seq;
}

VanishingSequence vanishing_sequence(const NormalForm5& nf, int certify_through) {
  for (int order = kDefaultBranchOrder;; order *= 2) {
    try {
      return vanishing_sequence(branch_expand(nf, order), certify_through);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientPrecision || order * 2 > kMaxBranchOrder) throw;
    }
  }
}

bool is_weierstrass(const NormalForm5& nf) {
  auto seq = vanishing_sequence(nf, 5);
  return seq.b[4] >= 5;
}

PointedCurve5 random_curve(std::uint64_t seed) {
  std::mt19937_64 eng(seed * 0x9E3779B97F4A7C15ULL + 1);
  auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PointedCurve5 c;
    for (auto& x : c.point) x = Rational(draw(-2, 2));
    if (is_zero(c.point)) continue;
    std::size_t k = 0;
    while (c.point[k].is_zero()) ++k;
    for (auto& q : c.net) {
      std::array<Rational, kQuadricMonomials> coeffs;
      for (auto& a : coeffs) a = Rational(draw(-3, 3), draw(1, 2));
      q = Quadric(coeffs);
      // Move the residual onto x_k^2 so the quadric passes through p.
      Rational r = q.eval(c.point) / (c.point[k] * c.point[k]);
      q.set(static_cast<int>(k), static_cast<int>(k), q.a(static_cast<int>(k), static_cast<int>(k)) - r);
    }
    if (validate(c).ok()) return c;
  }
  throw Error(ErrorCode::GenericityFailure, "random_curve: no valid curve found");
}

PointedCurve5 limit_triple() {
  PointedCurve5 c;
  c.net[0].set(0, 4, 1);
  c.net[0].set(1, 3, 1);
  c.net[0].set(2, 2, 1);
  c.net[1].set(1, 4, 1);
  c.net[1].set(2, 3, 1);
  c.net[2].set(2, 4, 1);
  c.net[2].set(3, 3, -1);
  c.point = Vec{0, 0, 0, 0, 1};
  return c;
}

}  // namespace ratfib
