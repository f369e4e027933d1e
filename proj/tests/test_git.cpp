#include <doctest.h>

#include "ratfib/error.hpp"
#include "ratfib/git.hpp"
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
  return q;
}

PointedCurve5 limit_shape(const Rational& a, const Rational& b, const Rational& c) {
  auto lt = limit_triple();
  lt.net[0].set(1, 3, a);
  lt.net[0].set(2, 2, b);
  lt.net[1].set(2, 3, c);
  return lt;
}

LatticePoint e(std::size_t i) {
  LatticePoint v(5, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("one-parameter subgroups and linearizations") {
  CHECK_THROWS_AS(OnePS::make({0, 0, 0, 0, 0}), Error);
  CHECK_THROWS_AS(OnePS::make({1, 0, 0, 0, 0}), Error);
  CHECK(standard_one_ps().str() == "(-2,-1,0,1,2)");
  CHECK_THROWS_AS(Linearization::make(0, 0), Error);
  CHECK_THROWS_AS(Linearization::make(-1, 2), Error);
}

TEST_CASE("mu examples") {
  std::vector<LatticePoint> states{e(0), e(1)};
  auto l = OnePS::make({1, -1, 0, 0, 0});
  CHECK(mu(states, l) == -1);
  auto neg = OnePS::make({-1, 1, 0, 0, 0});
  long mx = std::max(pairing(l, states[0]), pairing(l, states[1]));
  CHECK(mu(states, neg) == -mx);
  CHECK_THROWS_AS(mu({}, l), Error);
}

TEST_CASE("combined weight formula") {
  // {x0x4, x1x3, x2x4} with the x4^3 point factor.
  LatticePoint st(5, 0);
  for (int k : {0, 4, 1, 3, 2, 4}) st[static_cast<std::size_t>(k)] -= 1;
  LatticePoint combined(5);
  for (std::size_t i = 0; i < 5; ++i) combined[i] = 3 * e(4)[i] + 2 * st[i];
  CHECK(pairing(standard_one_ps(), combined) == 6 + 2 * (12 - 14));
  CHECK(6 + 2 * (12 - 15) == 0);
  CHECK(6 + 2 * (12 - 16) == -2);
}

TEST_CASE("plucker states of normal forms") {
  Gen gen(2);
  const auto l0 = standard_one_ps();
  for (int trial = 0; trial < 30; ++trial) {
    auto c = make_normal_form(random_normal_net(gen)).as_curve();
    auto s = plucker_states(c, Linearization::make(3, 2));
    REQUIRE(s.point.size() == 1);
    REQUIRE(s.plucker.size() == s.plucker_index_sums.size());
    for (std::size_t k = 0; k < s.plucker.size(); ++k) {
      CHECK(s.plucker_index_sums[k] <= 15);
      LatticePoint comb(5);
      for (std::size_t i = 0; i < 5; ++i) comb[i] = 3 * s.point[0][i] + 2 * s.plucker[k][i];
      CHECK(pairing(l0, comb) == 6 + 2 * (12 - s.plucker_index_sums[k]));
    }
    CHECK(mu(s.combined, l0) >= 0);
    CHECK(torus_classify(s.combined).stability != Stability::Stable);
  }
}

TEST_CASE("mu decomposes over the two factors") {
  Gen gen(6);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto c = random_curve(seed);
    long a = gen.integer(0, 4);
    long b = gen.integer(1, 4);
    auto s = plucker_states(c, Linearization::make(a, b));
    std::array<long, 5> w{};
    long sum = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      w[i] = gen.integer(-3, 3);
      sum += w[i];
    }
    w[4] = -sum;
    if (sum == 0 && w[0] == 0 && w[1] == 0 && w[2] == 0 && w[3] == 0) continue;
    auto l = OnePS::make(w);
    CHECK(mu(s.combined, l) == a * mu(s.point, l) + b * mu(s.plucker, l));
  }
}

TEST_CASE("torus classification examples") {
  std::vector<LatticePoint> simplex{e(0), e(1), e(2), e(3), e(4)};
  CHECK(torus_classify(simplex).stability == Stability::Stable);

  std::vector<LatticePoint> line{{1, -1, 0, 0, 0}, {-1, 1, 0, 0, 0}};
  CHECK(torus_classify(line).stability == Stability::StrictlySemistable);

  std::vector<LatticePoint> half{{1, -1, 0, 0, 0}, {1, 0, -1, 0, 0}, {2, 0, 0, 0, -1}};
  auto r = torus_classify(half);
  REQUIRE(r.stability == Stability::Unstable);
  REQUIRE(r.destabilizing.has_value());
  CHECK(mu(half, *r.destabilizing) > 0);
  CHECK(pairing(*r.destabilizing, r.witness) == mu(half, *r.destabilizing));
}

TEST_CASE("torus classification against sampled subgroups") {
  Gen gen(77);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<LatticePoint> states(static_cast<std::size_t>(gen.integer(2, 8)), LatticePoint(5));
    for (auto& s : states)
      for (auto& x : s) x = gen.integer(-2, 2);
    auto r = torus_classify(states);
    if (r.stability == Stability::Unstable) {
      CHECK(mu(states, *r.destabilizing) > 0);
      continue;
    }
    // Semistable: no sampled subgroup is destabilizing.
    for (int k = 0; k < 40; ++k) {
      std::array<long, 5> w{};
      long sum = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        w[i] = gen.integer(-3, 3);
        sum += w[i];
      }
      w[4] = -sum;
      if (w == std::array<long, 5>{}) continue;
      long m = mu(states, OnePS::make(w));
      CHECK(m <= 0);
      if (r.stability == Stability::Stable) CHECK(m < 0);
    }
  }
}

TEST_CASE("flat limit of normal forms") {
  Gen gen(13);
  const auto l0 = standard_one_ps();
  for (int trial = 0; trial < 30; ++trial) {
    auto nf = make_normal_form(random_normal_net(gen));
    auto lim = flat_limit(nf.as_curve(), l0);
    auto expect = limit_shape(nf.a(1, 1, 3), nf.a(1, 2, 2), nf.a(2, 2, 3));
    CHECK(lim == expect);
    CHECK(flat_limit(lim, l0) == lim);
  }
  CHECK(flat_limit(limit_triple(), l0) == limit_triple());
}

TEST_CASE("flat limit is fixed by its subgroup") {
  Gen gen(14);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    std::array<long, 5> w{};
    long sum = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      w[i] = gen.integer(-3, 3);
      sum += w[i];
    }
    w[4] = -sum;
    if (w == std::array<long, 5>{}) continue;
    auto l = OnePS::make(w);
    auto c = random_curve(seed);
    try {
      auto lim = flat_limit(c, l);
      CHECK(flat_limit(lim, l) == lim);
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::LimitNotInX);
    }
  }
}

TEST_CASE("torus rescale") {
  auto r = torus_rescale(limit_shape(2, 3, 5));
  CHECK(r.c == M04Point::interior(Rational(10, 3)));
  CHECK(r.canonical == limit_shape(1, 1, Rational(10, 3)));

  auto one = torus_rescale(limit_triple());
  CHECK(one.canonical == limit_triple());
  CHECK(one.c == M04Point::boundary(BoundaryLabel::RC_ET));

  // Same invariant, different raw coefficients.
  CHECK(torus_rescale(limit_shape(1, 2, 4)).canonical == torus_rescale(limit_shape(4, 1, Rational(1, 2))).canonical);

  CHECK(torus_rescale(limit_shape(0, 3, 5)).c == M04Point::boundary(BoundaryLabel::RT_CE));
  CHECK(torus_rescale(limit_shape(2, 0, 5)).c == M04Point::boundary(BoundaryLabel::RE_CT));
  CHECK(torus_rescale(limit_shape(0, 0, 5)).c.kind == M04Point::Kind::Degenerate);
  CHECK(torus_rescale(limit_shape(0, 3, 5)).canonical == limit_shape(0, 1, 1));

  try {
    torus_rescale(random_curve(0));
    FAIL("expected ShapeMismatch");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ShapeMismatch);
  }
}

TEST_CASE("rescaled flat limit recovers the closed-form invariant") {
  Gen gen(15);
  for (int trial = 0; trial < 60; ++trial) {
    auto nf = make_normal_form(random_normal_net(gen));
    auto r = torus_rescale(flat_limit(nf.as_curve(), standard_one_ps()));
    CHECK(r.c == phi5_closed_form(nf));
  }
}

TEST_CASE("vanishing pivots are destabilized next to O(3,2)") {
  Gen gen(16);
  for (int alpha = 1; alpha <= 3; ++alpha) {
    for (int trial = 0; trial < 5; ++trial) {
      auto net = random_normal_net(gen);
      net[static_cast<std::size_t>(alpha - 1)].set(alpha - 1, 4, 0);
      PointedCurve5 c{net, Vec{0, 0, 0, 0, 1}};
      if (!validate(c).independent) continue;
      for (auto lin : {Linearization::make(29, 20), Linearization::make(31, 20)}) {
        auto cert = pivot_certificate(c, alpha, lin);
        REQUIRE(cert.result.stability == Stability::Unstable);
        auto states = plucker_states(c, lin).combined;
        CHECK(mu(states, *cert.result.destabilizing) > 0);
      }
    }
  }
  CHECK_THROWS_AS(pivot_certificate(limit_triple(), 1, Linearization::make(29, 20)), Error);
}
