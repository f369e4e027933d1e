#include <doctest.h>

#include "ratfib/error.hpp"
#include "ratfib/phi5.hpp"
#include "test_support.hpp"

using namespace ratfib;
using ratfib::testing::Gen;

namespace {

Net random_normal_net(Gen& gen) {
  Net q;
  for (int alpha = 1; alpha <= 3; ++alpha) {
    for (auto [i, j] : quadric_monomials()) {
      if (i + j > 3 + alpha) continue;
      q[alpha - 1].set(i, j, gen.coin() ? Rational(0) : gen.small_rational(3));
    }
  }
  q[0].set(0, 4, 1);
  q[1].set(1, 4, 1);
  q[2].set(2, 4, 1);
  q[2].set(3, 3, -1);
  // Keep the three coefficients of the invariant generic.
  q[0].set(1, 3, gen.nonzero_rational(3));
  q[0].set(2, 2, gen.nonzero_rational(3));
  q[1].set(2, 3, gen.nonzero_rational(3));
  return q;
}

Matrix random_invertible(Gen& gen) {
  for (;;) {
    Matrix m(kP4, kP4);
    for (std::size_t i = 0; i < kP4; ++i)
      for (std::size_t j = 0; j < kP4; ++j) m(i, j) = gen.small_rational(2);
    if (!determinant(m).is_zero()) return m;
  }
}

NormalForm5 with_invariant(const Rational& a113, const Rational& a122, const Rational& a223) {
  auto net = limit_triple().net;
  net[0].set(1, 3, a113);
  net[0].set(2, 2, a122);
  net[1].set(2, 3, a223);
  return make_normal_form(net);
}

}  // namespace

TEST_CASE("cross ratio normalization and klein four invariance") {
  P1Point zero{0, 1};
  P1Point one{1, 1};
  P1Point inf{1, 0};
  CHECK(cross_ratio(zero, one, inf, P1Point{7, 3}) == Rational(7, 3));
  CHECK(cross_ratio(zero, one, inf, inf) == std::nullopt);
  CHECK(cross_ratio(zero, zero, inf, one) == std::nullopt);

  Gen gen(3);
  int checked = 0;
  while (checked < 50) {
    P1Point a{gen.small_rational(), gen.small_rational()};
    P1Point b{gen.small_rational(), gen.small_rational()};
    P1Point c{gen.small_rational(), gen.small_rational()};
    P1Point d{gen.small_rational(), gen.small_rational()};
    auto base = cross_ratio(a, b, c, d);
    if (!base || !cross_ratio(b, a, d, c) || !cross_ratio(c, d, a, b) || !cross_ratio(d, c, b, a)) continue;
    CHECK(*cross_ratio(b, a, d, c) == *base);
    CHECK(*cross_ratio(c, d, a, b) == *base);
    CHECK(*cross_ratio(d, c, b, a) == *base);
    ++checked;
  }
}

TEST_CASE("surface and hyperplane") {
  auto nf = make_normal_form(limit_triple().net);
  auto sh = surface_and_hyperplane(nf);
  CHECK(sh.surface.q1 == limit_triple().net[0]);
  CHECK(sh.surface.q2 == limit_triple().net[1]);
  CHECK(sh.hyperplane == Vec{1, 0, 0, 0, 0});

  Gen gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto r = make_normal_form(random_normal_net(gen));
    auto z = surface_and_hyperplane(r).surface;
    for (int k = -2; k <= 2; ++k) {
      Vec on_line{0, 0, 0, Rational(k), 1};
      CHECK(z.q1.eval(on_line).is_zero());
      CHECK(z.q2.eval(on_line).is_zero());
    }
    CHECK(r.quadrics[2].eval(Vec{0, 0, 0, 1, 0}) == Rational(-1));
  }
}

TEST_CASE("residual curve of the limit triple") {
  auto sh = surface_and_hyperplane(make_normal_form(limit_triple().net));
  auto g = residual_curve(sh.surface, sh.hyperplane);
  CHECK(g.r(1, 0) == Rational(1));
  CHECK(g.r(0, 1) == Rational(0));
  CHECK(g.r(0, 2) == Rational(-1));
  CHECK(g.r(0, 0) == Rational(0));
  CHECK_FALSE(g.full.divide_by_variable(0, 2).has_value());
  CHECK_THROWS_AS(residual_curve(sh.surface, Vec{0, 1, 0, 0, 0}), Error);
}

TEST_CASE("residual factor coefficients match the closed form") {
  Gen gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    auto nf = make_normal_form(random_normal_net(gen));
    auto sh = surface_and_hyperplane(nf);
    auto g = residual_curve(sh.surface, sh.hyperplane);
    CHECK(g.r(1, 0) == nf.a(1, 2, 2));
    CHECK(g.r(0, 1) == Rational(0));
    CHECK(g.r(0, 2) == -nf.a(2, 2, 3) * nf.a(1, 1, 3));
    // The a_{1,1,1} factor of the displayed intermediate does not appear.
    auto scaled = nf.quadrics;
    scaled[0].set(1, 1, nf.a(1, 1, 1) + Rational(5));
    auto g2 = residual_curve(surface_and_hyperplane(make_normal_form(scaled)).surface, sh.hyperplane);
    CHECK(g2.r(1, 0) == g.r(1, 0));
    CHECK(g2.r(0, 2) == g.r(0, 2));
  }
}

TEST_CASE("residual factor has no linear x2 term when a_{1,2,2} vanishes") {
  auto nf = with_invariant(2, 0, 3);
  auto sh = surface_and_hyperplane(nf);
  auto g = residual_curve(sh.surface, sh.hyperplane);
  CHECK(g.r(1, 0) == Rational(0));
  CHECK(phi5_blowup(nf) == M04Point::boundary(BoundaryLabel::RE_CT));
}

TEST_CASE("four points of the limit triple") {
  auto nf = make_normal_form(limit_triple().net);
  auto sh = surface_and_hyperplane(nf);
  auto pts = blowup_four_points(residual_curve(sh.surface, sh.hyperplane), branch_expand(nf, 8));
  CHECK(pts.r == P1Point{1, 1});
  CHECK(pts.c == P1Point{1, 1});
  CHECK(pts.t == P1Point{0, 1});
  CHECK(pts.e == P1Point{1, 0});
  CHECK(classify_four_points(pts) == M04Point::boundary(BoundaryLabel::RC_ET));
  CHECK_THROWS_AS(blowup_four_points(residual_curve(sh.surface, sh.hyperplane), branch_expand(nf, 4)), Error);
}

TEST_CASE("closed form examples") {
  CHECK(phi5_closed_form(make_normal_form(limit_triple().net)) == M04Point::boundary(BoundaryLabel::RC_ET));
  auto p = phi5_closed_form(with_invariant(2, 4, 3));
  CHECK(p.kind == M04Point::Kind::Interior);
  CHECK(p.lambda == Rational(3, 2));
  CHECK(phi5_closed_form(with_invariant(0, 1, 3)) == M04Point::boundary(BoundaryLabel::RT_CE));
  CHECK(phi5_closed_form(with_invariant(2, 0, 3)) == M04Point::boundary(BoundaryLabel::RE_CT));
  CHECK(phi5_closed_form(with_invariant(0, 0, 3)).kind == M04Point::Kind::Degenerate);
}

TEST_CASE("blow-up path agrees with the closed form") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    auto c = random_curve(seed);
    auto nf = normalize(c);
    CHECK(phi5(c) == phi5_closed_form(nf));
  }
  Gen gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    auto nf = make_normal_form(random_normal_net(gen));
    CHECK(phi5_blowup(nf) == phi5_closed_form(nf));
  }
  CHECK_THROWS_AS(phi5_blowup(with_invariant(0, 0, 3)), Error);
}

TEST_CASE("phi5 is invariant under coordinate changes") {
  Gen gen(31);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto c = random_curve(seed);
    auto moved = transform(c, random_invertible(gen));
    CHECK(phi5(moved) == phi5(c));
  }
}

TEST_CASE("phi5 propagates normalization failures") {
  PointedCurve5 c;
  c.net[0].set(0, 4, 1);
  c.net[1].set(1, 4, 1);
  c.net[2].set(2, 4, 1);
  c.net[2].set(0, 3, 1);
  c.point = Vec{0, 0, 0, 0, 1};
  try {
    phi5(c);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GenericityFailure);
  }
}

TEST_CASE("divisor detectors on the limit triple and constructed instances") {
  auto lt = detect_bn_divisors(make_normal_form(limit_triple().net));
  CHECK(lt.weierstrass);
  CHECK_FALSE(lt.bn4_03);
  CHECK_FALSE(lt.bn6_024);

  Gen gen(5);
  for (int trial = 0; trial < 15; ++trial) {
    auto net = random_normal_net(gen);
    auto generic = detect_bn_divisors(make_normal_form(net));
    CHECK_FALSE(generic.bn4_03);
    CHECK_FALSE(generic.bn6_024);

    auto w = net;
    w[0].set(2, 2, w[0].a(1, 3) * w[1].a(2, 3));
    auto nfw = make_normal_form(w);
    CHECK(detect_bn_divisors(nfw).weierstrass);
    CHECK(phi5_blowup(nfw) == M04Point::boundary(BoundaryLabel::RC_ET));

    auto b6 = net;
    b6[0].set(1, 3, 0);
    auto nf6 = make_normal_form(b6);
    CHECK(detect_bn_divisors(nf6).bn6_024);
    CHECK(phi5_blowup(nf6) == M04Point::boundary(BoundaryLabel::RT_CE));

    auto b4 = net;
    b4[0].set(2, 2, 0);
    auto nf4 = make_normal_form(b4);
    CHECK(detect_bn_divisors(nf4).bn4_03);
    CHECK(phi5_blowup(nf4) == M04Point::boundary(BoundaryLabel::RE_CT));
  }
}

TEST_CASE("tangent pencil forms") {
  auto [f1, f2] = tangent_pencil_forms(with_invariant(2, 4, 3));
  CHECK(f1.coeffs() == std::vector<Rational>{4, 0});
  CHECK(f2.coeffs() == std::vector<Rational>{0, 3});
  CHECK_FALSE(binary_resultant(f1, f2).is_zero());
}
