#include <doctest.h>

#include <set>

#include "ratfib/error.hpp"
#include "ratfib/genus6.hpp"
#include "test_support.hpp"

using namespace ratfib;
using ratfib::testing::Gen;

namespace {

PointedCurve6 random_curve6(Gen& gen, const QuinticDP& y, const Vec& p) {
  PointedCurve6 c;
  c.surface = y;
  c.point = p;
  for (const auto& f : sextics_through(y, p)) c.sextic += f * gen.small_rational(3);
  if (c.sextic.is_zero()) c.sextic = sextics_through(y, p)[0];
  return c;
}

Vec random_point(Gen& gen) {
  for (;;) {
    Vec p{Rational(gen.integer(-6, 6)), Rational(gen.integer(-6, 6)), Rational(gen.integer(1, 6))};
    if (!is_zero(p)) return p;
  }
}

QuinticDP random_surface(Gen& gen) {
  for (;;) {
    try {
      return QuinticDP::make({random_point(gen), random_point(gen), random_point(gen), random_point(gen)});
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("general position guard") {
  CHECK_NOTHROW(standard_quintic_dp());
  try {
    QuinticDP::make({Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{1, 1, 0}, Vec{0, 0, 1}});
    FAIL("expected GeneralPositionFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GeneralPositionFailure);
  }
  CHECK_THROWS_AS(QuinticDP::make({Vec{1, 0, 0}, Vec{2, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}}), Error);
}

TEST_CASE("ten (-1)-curves with the expected intersection table") {
  auto y = standard_quintic_dp();
  auto curves = neg_curves(y);
  REQUIRE(curves.size() == 10);
  bool found = false;
  for (const auto& c : curves) {
    CHECK(intersection(c, c) == -1);
    if (c.kind == NegCurve::Kind::Line && c.i == 2 && c.j == 3) {
      // x0 = x1 passes through (0:0:1) and (1:1:1).
      CHECK(in_span({Vec{1, -1, 0}}, c.line));
      found = true;
    }
  }
  CHECK(found);
  for (const auto& a : curves) {
    for (const auto& b : curves) {
      if (a == b) continue;
      long expect = 0;
      if (a.kind == NegCurve::Kind::Exceptional && b.kind == NegCurve::Kind::Line) {
        expect = (a.i == b.i || a.i == b.j) ? 1 : 0;
      } else if (a.kind == NegCurve::Kind::Line && b.kind == NegCurve::Kind::Exceptional) {
        expect = (b.i == a.i || b.i == a.j) ? 1 : 0;
      } else if (a.kind == NegCurve::Kind::Line && b.kind == NegCurve::Kind::Line) {
        std::set<int> s{a.i, a.j};
        int common = static_cast<int>(s.count(b.i) + s.count(b.j));
        expect = 1 - common;
      }
      CHECK(intersection(a, b) == expect);
    }
  }
}

TEST_CASE("five blow-down sets") {
  Gen gen(1);
  for (int trial = 0; trial < 5; ++trial) {
    auto y = trial == 0 ? standard_quintic_dp() : random_surface(gen);
    auto sets = blow_down_sets(y);
    REQUIRE(sets.size() == 5);
    int all_exceptional = 0;
    for (const auto& s : sets) {
      int ex = 0;
      for (const auto& c : s) ex += c.kind == NegCurve::Kind::Exceptional ? 1 : 0;
      if (ex == 4) {
        ++all_exceptional;
      } else {
        CHECK(ex == 1);
      }
    }
    CHECK(all_exceptional == 1);
  }
}

TEST_CASE("points on (-1)-curves") {
  auto y = standard_quintic_dp();
  auto on = on_neg_curve(y, SurfacePoint::in_plane(Vec{2, 3, 0}));
  REQUIRE(on.has_value());
  CHECK(on->label() == "L12");
  CHECK_FALSE(on_neg_curve(y, SurfacePoint::in_plane(Vec{1, 2, 3})).has_value());
  try {
    on_neg_curve(y, SurfacePoint::in_plane(Vec{2, 0, 0}));
    FAIL("expected BasePointInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasePointInput);
  }
  auto ex = on_neg_curve(y, SurfacePoint::on_exceptional(0, Vec{1, 2, 3}));
  REQUIRE(ex.has_value());
  CHECK(ex->label() == "E1");
}

TEST_CASE("phi6 regression anchor") {
  Gen gen(2);
  auto y = standard_quintic_dp();
  auto c = random_curve6(gen, y, Vec{1, 2, 3});
  auto r = phi6(c);
  REQUIRE(r.kind == M05OrbitPoint::Kind::Interior);
  CHECK(r.config == std::array<Rational, 2>{-3, -1});
}

TEST_CASE("phi6 boundary on a line through two base points") {
  Gen gen(3);
  auto y = standard_quintic_dp();
  auto c = random_curve6(gen, y, Vec{2, 3, 0});
  auto r = phi6(c);
  CHECK(r.kind == M05OrbitPoint::Kind::Boundary);
  CHECK(r.shape == "2|3");
  CHECK(r.pattern == "{3,4}|{1,2,p}");
  auto d = d6_membership(c);
  CHECK(d.in_d6);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->label() == "L12");
}

TEST_CASE("phi6 boundary agrees with D6 membership") {
  Gen gen(4);
  for (int s = 0; s < 3; ++s) {
    auto y = s == 0 ? standard_quintic_dp() : random_surface(gen);
    auto curves = neg_curves(y);
    int in = 0;
    for (int trial = 0; trial < 50; ++trial) {
      Vec p;
      if (trial % 2 == 0) {
        const auto& l = curves[4 + static_cast<std::size_t>(gen.integer(0, 5))];
        Rational a = gen.nonzero_rational(4);
        Rational b = gen.nonzero_rational(4);
        p = Vec(3);
        for (std::size_t k = 0; k < 3; ++k) p[k] = a * y.base[l.i][k] + b * y.base[l.j][k];
      } else {
        p = random_point(gen);
      }
      bool base = false;
      for (const auto& b : y.base) base = base || in_span({b}, p);
      if (base) continue;
      auto c = random_curve6(gen, y, p);
      bool boundary = phi6(c).kind == M05OrbitPoint::Kind::Boundary;
      auto d = d6_membership(c);
      CHECK(boundary == d.in_d6);
      in += d.in_d6 ? 1 : 0;
    }
    CHECK(in >= 25);
  }
}

TEST_CASE("witness line meets the curve in two further points") {
  Gen gen(5);
  auto y = standard_quintic_dp();
  for (int trial = 0; trial < 10; ++trial) {
    auto curves = neg_curves(y);
    const auto& l = curves[4 + static_cast<std::size_t>(gen.integer(0, 5))];
    Rational a = gen.nonzero_rational(4);
    Rational b = gen.nonzero_rational(4);
    Vec p(3);
    for (std::size_t k = 0; k < 3; ++k) p[k] = a * y.base[l.i][k] + b * y.base[l.j][k];
    auto c = random_curve6(gen, y, p);
    auto d = d6_membership(c);
    REQUIRE(d.witness.has_value());
    auto res = neg_curve_residual(c, *d.witness);
    CHECK(res.degree() == 2);
    CHECK_FALSE(res.is_zero());
    if (d.witness->i == l.i && d.witness->j == l.j) CHECK(res.eval(a, b).is_zero());
  }
  auto c = random_curve6(gen, y, Vec{1, 2, 3});
  auto e1 = neg_curves(y)[0];
  CHECK(neg_curve_residual(c, e1).degree() == 2);
}

TEST_CASE("phi6 is invariant under relabelling and projective changes") {
  Gen gen(6);
  for (int trial = 0; trial < 10; ++trial) {
    auto y = random_surface(gen);
    Vec p = random_point(gen);
    bool skip = false;
    for (const auto& b : y.base) skip = skip || in_span({b}, p);
    if (skip) continue;
    auto c = random_curve6(gen, y, p);
    auto base = phi6(c);

    auto perm = c;
    std::swap(perm.surface.base[0], perm.surface.base[2]);
    std::swap(perm.surface.base[1], perm.surface.base[3]);
    CHECK(phi6(perm) == base);

    Matrix g(3, 3);
    do {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) g(i, j) = gen.small_rational(2);
    } while (determinant(g).is_zero());
    CHECK(phi6(transform(c, g)) == base);
  }
}

TEST_CASE("curve6 invariants are enforced") {
  auto y = standard_quintic_dp();
  PointedCurve6 c;
  c.surface = y;
  c.point = Vec{1, 2, 3};
  c.sextic = MPoly::monomial({6, 0, 0}, 1);
  CHECK_THROWS_AS(check_curve6(c), Error);
  Gen gen(7);
  auto ok = random_curve6(gen, y, Vec{1, 2, 3});
  ok.point = Vec{0, 0, 5};
  try {
    phi6(ok);
    FAIL("expected BasePointInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasePointInput);
  }
}
