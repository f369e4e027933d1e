#include "ratfib/git.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ratfib/error.hpp"

namespace ratfib {

OnePS OnePS::make(const std::array<long, 5>& weights) {
  long sum = 0;
  bool trivial = true;
  for (long x : weights) {
    sum += x;
    if (x != 0) trivial = false;
  }
  if (trivial) throw Error(ErrorCode::PreconditionViolation, "trivial 1-parameter subgroup");
  if (sum != 0) throw Error(ErrorCode::PreconditionViolation, "1-parameter subgroup weights must sum to zero");
  OnePS l;
  l.w = weights;
  return l;
}

std::string OnePS::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < 5; ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

OnePS standard_one_ps() { return OnePS::make({-2, -1, 0, 1, 2}); }

Linearization Linearization::make(long a, long b) {
  if (a < 0 || b < 0 || (a == 0 && b == 0)) {
    throw Error(ErrorCode::PreconditionViolation, "linearization needs a, b >= 0, not both zero");
  }
  return Linearization{a, b};
}

std::vector<std::pair<std::array<std::size_t, 3>, Rational>> plucker_coordinates(const Net& net) {
  std::vector<std::pair<std::array<std::size_t, 3>, Rational>> out;
  const Matrix m = net_matrix(net);
  for (std::size_t i = 0; i < kQuadricMonomials; ++i) {
    for (std::size_t j = i + 1; j < kQuadricMonomials; ++j) {
      for (std::size_t k = j + 1; k < kQuadricMonomials; ++k) {
        Rational d = m(0, i) * (m(1, j) * m(2, k) - m(1, k) * m(2, j)) -
                     m(0, j) * (m(1, i) * m(2, k) - m(1, k) * m(2, i)) +
                     m(0, k) * (m(1, i) * m(2, j) - m(1, j) * m(2, i));
        if (!d.is_zero()) out.push_back({{i, j, k}, d});
      }
    }
  }
  return out;
}

namespace {

// Points of X: the point may be singular on the curve.
void require_in_x(const PointedCurve5& curve) {
  auto r = validate(curve);
  if (!r.point_nonzero || !r.independent || !r.incident) {
    throw Error(ErrorCode::PreconditionViolation, "curve fails validation: " + r.failure());
  }
}

void dedup(std::vector<LatticePoint>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

StateSet plucker_states(const PointedCurve5& curve, const Linearization& lin) {
  require_in_x(curve);
  StateSet s;
  for (std::size_t i = 0; i < kP4; ++i) {
    if (curve.point[i].is_zero()) continue;
    LatticePoint e(kP4, 0);
    e[i] = 1;
    s.point.push_back(e);
  }
  for (const auto& [slots, value] : plucker_coordinates(curve.net)) {
    LatticePoint st(kP4, 0);
    int sum = 0;
    for (std::size_t k : slots) {
      auto [i, j] = quadric_monomials()[k];
      st[i] -= 1;
      st[j] -= 1;
      sum += i + j;
    }
    s.plucker.push_back(st);
    s.plucker_index_sums.push_back(sum);
  }
  dedup(s.point);
  for (const auto& p : s.point) {
    for (const auto& q : s.plucker) {
      LatticePoint c(kP4);
      for (std::size_t i = 0; i < kP4; ++i) c[i] = lin.a * p[i] + lin.b * q[i];
      s.combined.push_back(c);
    }
  }
  dedup(s.combined);
  return s;
}

long pairing(const OnePS& l, const LatticePoint& s) {
  if (s.size() != kP4) throw Error(ErrorCode::DimensionMismatch, "state must have 5 entries");
  long acc = 0;
  for (std::size_t i = 0; i < kP4; ++i) acc += l.w[i] * s[i];
  return acc;
}

long mu(const std::vector<LatticePoint>& states, const OnePS& l) {
  if (states.empty()) throw Error(ErrorCode::PreconditionViolation, "empty state set");
  long best = pairing(l, states.front());
  for (const auto& s : states) best = std::min(best, pairing(l, s));
  return best;
}

std::string stability_name(Stability s) {
  switch (s) {
    case Stability::Stable:
      return "stable";
    case Stability::StrictlySemistable:
      return "strictly-semistable";
    case Stability::Unstable:
      return "unstable";
  }
  return "?";
}

TorusClassification torus_classify(const std::vector<LatticePoint>& states) {
  if (states.empty()) throw Error(ErrorCode::PreconditionViolation, "empty state set");
  // Pairings with sum-zero weights only see the projection to the sum-zero
  // hyperplane; coordinates 0..3 of 5 s - (sum s) 1 identify it with Z^4.
  std::vector<LatticePoint> proj;
  for (const auto& s : states) {
    if (s.size() != kP4) throw Error(ErrorCode::DimensionMismatch, "state must have 5 entries");
    long sum = std::accumulate(s.begin(), s.end(), 0L);
    LatticePoint p(4);
    for (std::size_t i = 0; i < 4; ++i) p[i] = 5 * s[i] - sum;
    proj.push_back(p);
  }
  TorusClassification out;
  if (zero_in_interior(proj)) {
    out.stability = Stability::Stable;
    return out;
  }
  auto hull = zero_in_hull(proj);
  if (hull.contains_zero) {
    out.stability = Stability::StrictlySemistable;
    return out;
  }
  out.stability = Stability::Unstable;
  const auto& y = hull.separator;
  long ysum = std::accumulate(y.begin(), y.end(), 0L);
  std::array<long, 5> w{};
  for (std::size_t i = 0; i < 5; ++i) w[i] = (i < 4 ? 5 * y[i] : 0) - ysum;
  long g = 0;
  for (long x : w) g = std::gcd(g, x);
  for (auto& x : w) x /= g;
  out.destabilizing = OnePS::make(w);
  long best = 0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    long v = pairing(*out.destabilizing, states[k]);
    if (k == 0 || v < best) {
      best = v;
      out.witness = states[k];
    }
  }
  return out;
}

namespace {

// Monomial slots in the flat-limit column order: by j descending, then i.
const std::array<std::size_t, kQuadricMonomials>& limit_order() {
  static const auto order = [] {
    std::array<std::size_t, kQuadricMonomials> o{};
    std::size_t k = 0;
    for (int j = 4; j >= 0; --j)
      for (int i = 0; i <= j; ++i) o[k++] = monomial_slot(i, j);
    return o;
  }();
  return order;
}

Net rows_to_net(const Matrix& m, const std::vector<std::size_t>& cols) {
  Net net;
  for (std::size_t r = 0; r < 3; ++r) {
    std::array<Rational, kQuadricMonomials> c{};
    for (std::size_t k = 0; k < cols.size(); ++k) c[cols[k]] = m(r, k);
    net[r] = Quadric(c);
  }
  return net;
}

Matrix columns_in_order(const Net& net, const std::vector<std::size_t>& cols) {
  Matrix m(3, cols.size());
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = net[r].coeffs()[cols[k]];
  return m;
}

long coefficient_weight(const OnePS& l, std::size_t slot) {
  auto [i, j] = quadric_monomials()[slot];
  return -(l.w[i] + l.w[j]);
}

}  // namespace

Net canonical_net(const Net& net) {
  std::vector<std::size_t> cols(limit_order().begin(), limit_order().end());
  auto red = rref(columns_in_order(net, cols));
  if (red.pivots.size() != 3) throw Error(ErrorCode::PreconditionViolation, "net is not 3-dimensional");
  return rows_to_net(red.reduced, cols);
}

PointedCurve5 flat_limit(const PointedCurve5& curve, const OnePS& l) {
  require_in_x(curve);
  OnePS::make(l.w);

  std::vector<std::size_t> cols(limit_order().begin(), limit_order().end());
  std::stable_sort(cols.begin(), cols.end(), [&](std::size_t x, std::size_t y) {
    return coefficient_weight(l, x) < coefficient_weight(l, y);
  });
  auto red = rref(columns_in_order(curve.net, cols));
  Matrix initial(3, cols.size());
  for (std::size_t r = 0; r < 3; ++r) {
    long lead = coefficient_weight(l, cols[red.pivots[r]]);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (coefficient_weight(l, cols[k]) == lead) initial(r, k) = red.reduced(r, k);
    }
  }
  PointedCurve5 out;
  out.net = canonical_net(rows_to_net(initial, cols));

  long pmin = 0;
  bool first = true;
  for (std::size_t i = 0; i < kP4; ++i) {
    if (curve.point[i].is_zero()) continue;
    if (first || l.w[i] < pmin) pmin = l.w[i];
    first = false;
  }
  for (std::size_t i = 0; i < kP4; ++i) {
    if (!curve.point[i].is_zero() && l.w[i] == pmin) out.point[i] = curve.point[i];
  }
  for (const auto& q : out.net) {
    if (!q.eval(out.point).is_zero()) {
      throw Error(ErrorCode::LimitNotInX, "flat limit: limit point does not lie on the limit net");
    }
  }

  // Cross-check: the limit's Plucker vector is the initial Plucker vector.
  auto weight = [&](const std::array<std::size_t, 3>& s) {
    return coefficient_weight(l, s[0]) + coefficient_weight(l, s[1]) + coefficient_weight(l, s[2]);
  };
  auto before = plucker_coordinates(curve.net);
  long wmin = weight(before.front().first);
  for (const auto& [s, v] : before) wmin = std::min(wmin, weight(s));
  std::vector<std::pair<std::array<std::size_t, 3>, Rational>> init;
  for (const auto& pc : before)
    if (weight(pc.first) == wmin) init.push_back(pc);
  auto after = plucker_coordinates(out.net);
  bool ok = after.size() == init.size();
  for (std::size_t k = 0; ok && k < init.size(); ++k) {
    ok = after[k].first == init[k].first && after[k].second * init[0].second == init[k].second * after[0].second;
  }
  if (!ok) throw Error(ErrorCode::EliminationFailure, "flat limit: Plucker cross-check failed");
  return out;
}

RescaleResult torus_rescale(const PointedCurve5& limit) {
  auto shape_error = [] {
    return Error(ErrorCode::ShapeMismatch,
                 "expected x0x4 + A x1x3 + B x2^2, x1x4 + C x2x3, x2x4 - x3^2 at (0:0:0:0:1)");
  };
  if (limit.point.size() != kP4 || !in_span({Vec{0, 0, 0, 0, 1}}, limit.point) || is_zero(limit.point)) {
    throw shape_error();
  }
  Net net;
  try {
    net = canonical_net(limit.net);
  } catch (const Error&) {
    throw shape_error();
  }
  const Rational a = net[0].a(1, 3);
  const Rational b = net[0].a(2, 2);
  const Rational c = net[1].a(2, 3);
  Net expected;
  expected[0].set(0, 4, 1);
  expected[0].set(1, 3, a);
  expected[0].set(2, 2, b);
  expected[1].set(1, 4, 1);
  expected[1].set(2, 3, c);
  expected[2].set(2, 4, 1);
  expected[2].set(3, 3, -1);
  if (net != expected) throw shape_error();

  // x_i -> d_i x_i with d = (beta/alpha, alpha beta, beta^2, beta, 1) scales
  // (A, B, C) to (alpha^2 beta A, alpha beta^3 B, beta^2 C / alpha).
  RescaleResult out;
  out.canonical.point = Vec{0, 0, 0, 0, 1};
  out.canonical.net[0].set(0, 4, 1);
  out.canonical.net[1].set(1, 4, 1);
  out.canonical.net[2].set(2, 4, 1);
  out.canonical.net[2].set(3, 3, -1);
  if (!a.is_zero()) out.canonical.net[0].set(1, 3, 1);
  if (!b.is_zero()) out.canonical.net[0].set(2, 2, 1);
  Rational num = c * a;
  if (!a.is_zero() && !b.is_zero()) {
    out.canonical.net[1].set(2, 3, num / b);
  } else if (!c.is_zero()) {
    out.canonical.net[1].set(2, 3, 1);
  }
  if (num.is_zero() && b.is_zero()) {
    out.c = M04Point::degenerate("C A = B = 0");
  } else if (b.is_zero()) {
    out.c = M04Point::boundary(BoundaryLabel::RE_CT);
  } else {
    out.c = M04Point::from_lambda(num / b);
  }
  return out;
}

PivotCertificate pivot_certificate(const PointedCurve5& curve, int alpha, const Linearization& lin) {
  static const std::array<std::pair<int, int>, 3> pivots{{{0, 4}, {1, 4}, {2, 4}}};
  if (alpha < 1 || alpha > 3) throw Error(ErrorCode::PreconditionViolation, "alpha must be 1, 2 or 3");
  auto [i, j] = pivots[static_cast<std::size_t>(alpha - 1)];
  if (!curve.net[static_cast<std::size_t>(alpha - 1)].a(i, j).is_zero()) {
    throw Error(ErrorCode::PreconditionViolation, "pivot coefficient does not vanish");
  }
  PivotCertificate out;
  out.alpha = alpha;
  out.result = torus_classify(plucker_states(curve, lin).combined);
  return out;
}

}  // namespace ratfib
