#pragma once

// Pointed genus-5 canonical curves as nets of quadrics in P^4.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ratfib/linalg.hpp"
#include "ratfib/mpoly.hpp"
#include "ratfib/series.hpp"

namespace ratfib {

inline constexpr std::size_t kP4 = 5;
inline constexpr std::size_t kQuadricMonomials = 15;

/// The 15 monomials x_i x_j, i <= j, in lexicographic order of (i, j).
const std::array<std::pair<int, int>, kQuadricMonomials>& quadric_monomials();
std::size_t monomial_slot(int i, int j);

/// Quadratic form sum_{i<=j} a_ij x_i x_j on Q^5.
class Quadric {
 public:
  Quadric() = default;
  explicit Quadric(std::array<Rational, kQuadricMonomials> coeffs) : a_(std::move(coeffs)) {}

  static Quadric from_mpoly(const MPoly& p);
  MPoly to_mpoly() const;

  /// Coefficient a_ij of x_i x_j; symmetric in i and j.
  const Rational& a(int i, int j) const { return a_[monomial_slot(i, j)]; }
  void set(int i, int j, const Rational& c) { a_[monomial_slot(i, j)] = c; }
  const std::array<Rational, kQuadricMonomials>& coeffs() const { return a_; }
  Vec coeff_vector() const { return Vec(a_.begin(), a_.end()); }
  bool is_zero() const;

  Rational eval(const Vec& x) const;
  /// Polar bilinear form B with B(x, x) = Q(x).
  Rational polar(const Vec& x, const Vec& y) const;
  Vec gradient(const Vec& x) const;
  /// The form y -> Q(M y).
  Quadric substitute(const Matrix& m) const;

  Quadric& operator+=(const Quadric& o);
  Quadric& operator*=(const Rational& c);
  friend Quadric operator+(Quadric a, const Quadric& b) { return a += b; }
  friend Quadric operator*(Quadric a, const Rational& c) { return a *= c; }
  friend bool operator==(const Quadric& a, const Quadric& b) = default;

  std::string str() const;

 private:
  std::array<Rational, kQuadricMonomials> a_{};
};

using Net = std::array<Quadric, 3>;

Quadric combine(const Net& net, const Vec& weights);
/// 3 x 15 coefficient matrix of the net.
Matrix net_matrix(const Net& net);

struct PointedCurve5 {
  Net net;
  Vec point = Vec(kP4);

  friend bool operator==(const PointedCurve5&, const PointedCurve5&) = default;
};

/// Applies the projective change of coordinates x = M y: the new net is
/// Q o M and the new point is M^{-1} p.
PointedCurve5 transform(const PointedCurve5& curve, const Matrix& m);

struct ValidationReport {
  bool point_nonzero = true;
  bool independent = true;
  bool incident = true;
  bool smooth_at_point = true;

  bool ok() const { return point_nonzero && independent && incident && smooth_at_point; }
  /// Name of the first failing check, or empty.
  std::string failure() const;
};

/// Checks net independence, incidence p in every quadric, and rank 3 of the
/// Jacobian at p.
ValidationReport validate(const PointedCurve5& curve);

/// A net in the normal form: p = (0:0:0:0:1), tangent line {x0=x1=x2=0},
/// a_{alpha,i,j} = 0 for i + j > 3 + alpha, a_{1,0,4} = a_{2,1,4} = a_{3,2,4} = 1
/// and a_{3,3,3} = -1. Quadric index alpha is 1-based in `a`.
struct NormalForm5 {
  Net quadrics;
  /// Columns are the new basis vectors in old coordinates: x_old = M y.
  Matrix coordinate_change = Matrix::identity(kP4);
  /// Row alpha holds the weights of the original net combining (after
  /// substitution) into normalized quadric alpha.
  Matrix net_change = Matrix::identity(3);

  const Rational& a(int alpha, int i, int j) const { return quadrics.at(alpha - 1).a(i, j); }
  PointedCurve5 as_curve() const;
};

/// Checks every normal-form invariant; returns the first violation or empty.
std::string normal_form_violation(const Net& quadrics);

/// Builds a normal form from raw coefficients, validating invariants.
NormalForm5 make_normal_form(const Net& quadrics);

NormalForm5 normalize(const PointedCurve5& curve);

/// Germ of the curve at p in the chart x4 = 1 with parameter s = x3.
struct Branch {
  std::array<TruncSeries, 3> x{TruncSeries(0), TruncSeries(0), TruncSeries(0)};

  int order() const { return x[0].order(); }
};

Branch branch_expand(const NormalForm5& nf, int order);

/// Orders of vanishing at p of an adapted basis of hyperplane sections.
/// An order that the truncation cannot pin down is stored as the lower bound
/// N + 1 with `exact` false.
struct VanishingSequence {
  std::array<int, 5> b{};
  std::array<bool, 5> exact{true, true, true, true, true};

  std::string str() const;
};

inline constexpr int kDefaultBranchOrder = 8;
inline constexpr int kMaxBranchOrder = 64;

/// Throws InsufficientPrecision when some order <= `certify_through` cannot
/// be distinguished from larger ones at the branch's truncation.
VanishingSequence vanishing_sequence(const Branch& branch, int certify_through = 5);
/// Expands at the default order, doubling up to the cap on
/// InsufficientPrecision.
VanishingSequence vanishing_sequence(const NormalForm5& nf, int certify_through = 5);

/// Contact order of the osculating hyperplane {x0 = 0} is at least 5.
bool is_weierstrass(const NormalForm5& nf);

/// Deterministic in the seed; always passes validate.
PointedCurve5 random_curve(std::uint64_t seed);

/// The flat-limit triple x0x4 + x1x3 + x2^2, x1x4 + x2x3, x2x4 - x3^2 at
/// (0:0:0:0:1).
PointedCurve5 limit_triple();

}  // namespace ratfib
