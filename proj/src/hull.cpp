#include "ratfib/hull.hpp"

#include "ratfib/error.hpp"

namespace ratfib {

FeasibilityResult feasible_nonnegative(const Matrix& a, const Vec& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw Error(ErrorCode::DimensionMismatch, "rhs length");

  // Tableau [A' | I | b'] with b' >= 0; row m holds reduced costs and the
  // negated objective of the phase I problem min sum(artificials).
  const std::size_t width = n + m + 1;
  Matrix t(m + 1, width);
  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i].sign() < 0) flip[i] = -1;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip[i] < 0 ? -a(i, j) : a(i, j);
    t(i, n + i) = 1;
    t(i, width - 1) = flip[i] < 0 ? -b[i] : b[i];
  }
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < n + m) continue;
    Rational s;
    for (std::size_t i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = -s;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    // Bland: lowest-index improving column, lowest-index leaving variable.
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t(m, j).sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter).sign() <= 0) continue;
      Rational ratio = t(i, width - 1) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase I
    Rational inv = t(leave, enter).inverse();
    for (std::size_t j = 0; j < width; ++j) t(leave, j) *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter).is_zero()) continue;
      Rational f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j) {
        if (!t(leave, j).is_zero()) t(i, j) -= f * t(leave, j);
      }
    }
    basis[leave] = enter;
  }

  FeasibilityResult out;
  Rational objective = -t(m, width - 1);
  if (objective.is_zero()) {
    out.feasible = true;
    out.solution.assign(n, Rational{});
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) out.solution[basis[i]] = t(i, width - 1);
    return out;
  }
  // Duals of the flipped system: y_k = 1 - (reduced cost of artificial k).
  out.certificate.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    Rational y = Rational(1) - t(m, n + k);
    out.certificate[k] = flip[k] < 0 ? y : -y;
  }
  return out;
}

LatticePoint primitive_integer(const Vec& v) {
  mpz_class lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class z = x.numerator() * (lcm / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  LatticePoint out;
  for (auto& z : ints) {
    if (g != 0) z /= g;
    if (!z.fits_slong_p()) throw Error(ErrorCode::PreconditionViolation, "separator overflows long");
    out.push_back(z.get_si());
  }
  return out;
}

namespace {

std::size_t common_dimension(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw Error(ErrorCode::PreconditionViolation, "empty point set");
  std::size_t d = points[0].size();
  for (const auto& p : points)
    if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "points of different dimension");
  return d;
}

}  // namespace

HullMembership zero_in_hull(const std::vector<LatticePoint>& points) {
  const std::size_t d = common_dimension(points);
  const std::size_t n = points.size();
  Matrix a(d + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < d; ++i) a(i, j) = Rational(points[j][i]);
    a(d, j) = 1;
  }
  Vec b(d + 1);
  b[d] = 1;
  auto res = feasible_nonnegative(a, b);
  HullMembership out;
  out.contains_zero = res.feasible;
  if (!res.feasible) {
    // y = (f, c) with <f, s> + c >= 0 and c < 0, so <f, s> > 0 on every point.
    Vec f(res.certificate.begin(), res.certificate.begin() + static_cast<long>(d));
    out.separator = primitive_integer(f);
  }
  return out;
}

bool zero_in_interior(const std::vector<LatticePoint>& points) {
  const std::size_t d = common_dimension(points);
  const std::size_t n = points.size();
  Matrix a(d, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < d; ++i) a(i, j) = Rational(points[j][i]);
  if (rank(a) < d) return false;
  // sum w_j s_j = 0 with every w_j >= 1; substitute w = 1 + x, x >= 0.
  Vec b(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational s;
    for (std::size_t j = 0; j < n; ++j) s += a(i, j);
    b[i] = -s;
  }
  return feasible_nonnegative(a, b).feasible;
}

}  // namespace ratfib
