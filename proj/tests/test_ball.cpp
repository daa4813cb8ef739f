#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "critlab/ball.hpp"
#include "critlab/residuals.hpp"

using namespace critlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("euclidean ball n=3 r0=1: closed form") {
  const auto sol = construct_ball({SpaceForm::euclidean, 3, 1.0});
  CHECK(sol.f_max() == doctest::Approx(0.25).epsilon(1e-15));
  REQUIRE(sol.boundary().size() == 1);
  CHECK(sol.boundary()[0].mean_curvature == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sol.boundary()[0].area == doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK(sol.boundary()[0].intrinsic_scalar == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sol.max_kind() == MaxLocusKind::point);
  REQUIRE(sol.components().size() == 1);

  // substituting the closed form into the fundamental system leaves only
  // floating-point noise
  const auto res = miao_tam_residual(sol);
  CHECK(res.radial < 1e-12);
  CHECK(res.tangential < 1e-12);
  CHECK(res.trace < 1e-12);
}

TEST_CASE("spherical ball n=3 r0=pi/3: closed form") {
  const auto sol = construct_ball({SpaceForm::spherical, 3, kPi / 3});
  CHECK(sol.f_max() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(sol.boundary()[0].mean_curvature ==
        doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(sol.boundary()[0].mean_curvature == doctest::Approx(1.154701).epsilon(1e-6));
  CHECK(sol.boundary()[0].area == doctest::Approx(3 * kPi).epsilon(1e-12));
  const auto res = miao_tam_residual(sol);
  CHECK(std::max({res.radial, res.tangential, res.trace}) < 1e-12);
}

TEST_CASE("hyperbolic ball n=3 r0=1: closed form") {
  const auto sol = construct_ball({SpaceForm::hyperbolic, 3, 1.0});
  const double f_expected = (std::cosh(1.0) - 1.0) / (2.0 * std::cosh(1.0));
  CHECK(sol.f_max() == doctest::Approx(f_expected).epsilon(1e-14));
  CHECK(sol.f_max() == doctest::Approx(0.175974).epsilon(1e-5));
  CHECK(sol.boundary()[0].mean_curvature ==
        doctest::Approx(2.0 / std::tanh(1.0)).epsilon(1e-12));
  CHECK(sol.boundary()[0].mean_curvature == doctest::Approx(2.626071).epsilon(1e-6));
  const auto res = miao_tam_residual(sol);
  CHECK(std::max({res.radial, res.tangential, res.trace}) < 1e-12);
}

TEST_CASE("boundary mean curvature matches the geometric closed form") {
  // (n-1)/r0, (n-1) cot r0, (n-1) coth r0
  for (int n : {3, 4, 5, 6}) {
    const double r0 = 0.8;
    CHECK(construct_ball({SpaceForm::euclidean, n, r0}).boundary()[0].mean_curvature ==
          doctest::Approx((n - 1) / r0).epsilon(1e-10));
    CHECK(construct_ball({SpaceForm::spherical, n, r0}).boundary()[0].mean_curvature ==
          doctest::Approx((n - 1) / std::tan(r0)).epsilon(1e-10));
    CHECK(construct_ball({SpaceForm::hyperbolic, n, r0}).boundary()[0].mean_curvature ==
          doctest::Approx((n - 1) / std::tanh(r0)).epsilon(1e-10));
  }
}

TEST_CASE("boundary H times grad norm is exactly one") {
  for (auto kind : {SpaceForm::euclidean, SpaceForm::spherical, SpaceForm::hyperbolic}) {
    const auto sol = construct_ball({kind, 4, 0.9});
    for (const auto& bc : sol.boundary())
      CHECK(bc.mean_curvature * bc.grad_norm == 1.0);
  }
}

TEST_CASE("traceless identity holds on every ball") {
  for (auto kind : {SpaceForm::euclidean, SpaceForm::spherical, SpaceForm::hyperbolic})
    CHECK(traceless_identity_residual(construct_ball({kind, 3, 1.0})) < 1e-12);
}

TEST_CASE("perturbing the profile produces a visible trace residual") {
  // adding eps*(r^2 - r0^2) keeps the boundary zero and moves the trace
  // identity by eps * |lap(r^2) + R r^2/(n-1)| = 6 eps in flat 3-space
  auto sol = construct_ball({SpaceForm::euclidean, 3, 1.0});
  const double eps = 1e-6;
  RadialProfile prof = sol.potential();
  for (std::size_t i = 0; i < prof.grid.size(); ++i) {
    const double r = prof.grid[i];
    prof.f[i] += eps * (r * r - 1.0);
    prof.df[i] += 2 * eps * r;
    prof.d2f[i] += 2 * eps;
  }
  prof.f.back() = 0.0;
  const CriticalSolution bumped(sol.metric(), prof, prof.f.front(), {0.0},
                                MaxLocusKind::point, prof.d2f.front(),
                                sol.info());
  const auto res = miao_tam_residual(bumped);
  CHECK(res.trace == doctest::Approx(6.0 * eps).epsilon(1e-6));
}

TEST_CASE("invalid ball specs are rejected") {
  CHECK_THROWS_AS(construct_ball({SpaceForm::spherical, 3, 1.6}),
                  UnsupportedDomainError);
  CHECK_THROWS_AS(construct_ball({SpaceForm::spherical, 3, kPi / 2}),
                  UnsupportedDomainError);
  CHECK_THROWS_AS(construct_ball({SpaceForm::euclidean, 2, 1.0}),
                  UnsupportedDomainError);
  CHECK_THROWS_AS(construct_ball({SpaceForm::euclidean, 3, -1.0}),
                  UnsupportedDomainError);
}

TEST_CASE("boundary_data recomputation matches construction") {
  const auto sol = construct_ball({SpaceForm::spherical, 4, 1.1});
  const auto bd = boundary_data(sol);
  REQUIRE(bd.size() == sol.boundary().size());
  CHECK(bd[0].grad_norm == sol.boundary()[0].grad_norm);
  CHECK(bd[0].area == sol.boundary()[0].area);
}
