#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "critlab/residuals.hpp"
#include "critlab/schwarzschild.hpp"

using namespace critlab;

// Reference values for (n=3, m=1, anchored at r2=6) from an independent
// high-order integration of the same radial system (scipy DOP853 at
// rtol = atol = 1e-13), frozen here as the construction oracle.
namespace oracle_n3_m1_r2_6 {
constexpr double arc_length = 7.93999953102675;
constexpr double inner_radius = 2.06925061312165;
constexpr double s_star = 4.63901759480823;
constexpr double w_star = 2.72789548241307;
constexpr double f_max = 10.1496994933866;
constexpr double mean_curvature_outer = 0.272165526975909;
constexpr double mean_curvature_inner = 0.17681624700554;
}  // namespace oracle_n3_m1_r2_6

TEST_CASE("horizon radius") {
  CHECK(schwarzschild_horizon(3, 1.0, false) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(schwarzschild_horizon(4, 1.0, false) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  // 1 + r^2 - 2/r vanishes at r = 1
  CHECK(schwarzschild_horizon(3, 1.0, true) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("n=3 m=1 r2=6 matches the independent integration") {
  namespace ref = oracle_n3_m1_r2_6;
  const auto sol = construct_schwarzschild({3, 1.0, 2.2, 6.0, false});

  CHECK(sol.metric().grid().back() == doctest::Approx(ref::arc_length).epsilon(1e-9));
  CHECK(sol.f_max() == doctest::Approx(ref::f_max).epsilon(1e-9));
  REQUIRE(sol.max_locus().size() == 1);
  CHECK(sol.max_locus()[0] == doctest::Approx(ref::s_star).epsilon(1e-9));
  CHECK(sol.warping_at(sol.max_locus()[0]) ==
        doctest::Approx(ref::w_star).epsilon(1e-9));
  CHECK(sol.max_kind() == MaxLocusKind::sphere);

  REQUIRE(sol.boundary().size() == 2);
  CHECK(sol.metric().warping(0) == doctest::Approx(6.0).epsilon(1e-13));
  CHECK(sol.metric().warping(sol.metric().size() - 1) ==
        doctest::Approx(ref::inner_radius).epsilon(1e-9));
  CHECK(sol.boundary()[0].mean_curvature ==
        doctest::Approx(ref::mean_curvature_outer).epsilon(1e-10));
  CHECK(sol.boundary()[1].mean_curvature ==
        doctest::Approx(ref::mean_curvature_inner).epsilon(1e-9));

  // boundary mean curvature carries the closed form (n-1) sqrt(V(r_b))/r_b
  CHECK(sol.boundary()[0].mean_curvature ==
        doctest::Approx(2.0 * std::sqrt(1.0 - 2.0 / 6.0) / 6.0).epsilon(1e-12));
}

TEST_CASE("full system residuals are at integrator accuracy") {
  const auto sol = construct_schwarzschild({3, 1.0, 2.2, 6.0, false});
  const auto res = miao_tam_residual(sol);
  CHECK(res.radial < 1e-8);
  CHECK(res.tangential < 1e-8);  // the overdetermined component
  CHECK(res.trace < 1e-8);
  CHECK(traceless_identity_residual(sol) < 1e-8);
}

TEST_CASE("potential is positive with a nondegenerate interior maximum") {
  const auto sol = construct_schwarzschild({3, 1.0, 2.2, 6.0, false});
  const auto& f = sol.potential().f;
  CHECK(*std::min_element(f.begin() + 1, f.end() - 1) > 0.0);
  CHECK(f.front() == 0.0);
  CHECK(f.back() == 0.0);
  // trace identity at the maximum sphere: f'' = -(R f_max + n)/(n-1) = -3/2
  CHECK(sol.d2f_at_max() == doctest::Approx(-1.5).epsilon(1e-8));
  REQUIRE(sol.components().size() == 2);
  CHECK(sol.components()[0].second == doctest::Approx(sol.max_locus()[0]));
  CHECK(sol.components()[1].first == doctest::Approx(sol.max_locus()[0]));
}

TEST_CASE("superposition is independent of the homogeneous seed") {
  SchwarzschildOptions a, b;
  a.homogeneous_seed = 1.0;
  b.homogeneous_seed = 7.3;
  const auto sa = construct_schwarzschild({3, 1.0, 2.2, 6.0, false}, a);
  const auto sb = construct_schwarzschild({3, 1.0, 2.2, 6.0, false}, b);
  CHECK(sa.f_max() == doctest::Approx(sb.f_max()).epsilon(1e-10));
  double worst = 0.0;
  for (std::size_t i = 0; i < sa.potential().f.size(); ++i)
    worst = std::max(worst, std::abs(sa.potential().f[i] - sb.potential().f[i]));
  CHECK(worst / sa.f_max() < 1e-10);
}

TEST_CASE("halved-step cross-check: grid refinement does not move the profile") {
  const auto coarse = construct_schwarzschild({3, 1.0, 2.2, 6.0, false}, 1024);
  const auto fine = construct_schwarzschild({3, 1.0, 2.2, 6.0, false}, 2048);
  CHECK(coarse.f_max() == doctest::Approx(fine.f_max()).epsilon(1e-11));
  // every other fine node coincides with a coarse node
  double worst = 0.0;
  for (std::size_t i = 0; i < 1024; ++i)
    worst = std::max(worst,
                     std::abs(coarse.potential().f[i] - fine.potential().f[2 * i]));
  CHECK(worst / fine.f_max() < 1e-11);
}

TEST_CASE("AdS variant: R = -n(n-1), ceiling f_max < -n/R") {
  const auto sol = construct_schwarzschild({3, 1.0, 1.27, 4.0, true});
  CHECK(sol.scalar_curvature_constant() == -6.0);
  CHECK(sol.metric().scalar_constancy_deviation() < 1e-10);
  CHECK(sol.f_max() == doctest::Approx(0.312867992724766).epsilon(1e-8));
  CHECK(sol.f_max() < 0.5);  // -n/R = 1/2
  const auto res = miao_tam_residual(sol);
  CHECK(std::max({res.radial, res.tangential, res.trace}) < 1e-8);
}

TEST_CASE("n=4 variant") {
  const auto sol = construct_schwarzschild({4, 1.0, 1.44, 4.0, false});
  CHECK(sol.f_max() == doctest::Approx(2.1847538260785).epsilon(1e-8));
  CHECK(sol.metric().warping(sol.metric().size() - 1) ==
        doctest::Approx(1.43742961569102).epsilon(1e-8));
  const auto res = miao_tam_residual(sol);
  CHECK(std::max({res.radial, res.tangential, res.trace}) < 1e-8);
  // trace identity at the maximum sphere for n = 4: f'' = -4/3
  CHECK(sol.d2f_at_max() == doctest::Approx(-4.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("domain validation errors") {
  CHECK_THROWS_AS(construct_schwarzschild({3, 1.0, 2.2, 2.2, false}), DomainError);
  CHECK_THROWS_AS(construct_schwarzschild({3, 1.0, 6.0, 2.2, false}), DomainError);
  CHECK_THROWS_AS(construct_schwarzschild({3, 1.0, 1.5, 6.0, false}), DomainError);
  CHECK_THROWS_AS(construct_schwarzschild({3, 1.0, 2.0, 6.0, false}), DomainError);
  CHECK_THROWS_AS(construct_schwarzschild({3, -1.0, 2.2, 6.0, false}),
                  UnsupportedDomainError);
  // requested inner radius far from the realized one
  CHECK_THROWS_AS(construct_schwarzschild({3, 1.0, 4.0, 6.0, false}), DomainError);
}

TEST_CASE("realized inner radius is reported in the solution metadata") {
  const auto sol = construct_schwarzschild({3, 1.0, 2.2, 6.0, false});
  double requested = 0.0, realized = 0.0;
  for (const auto& [k, v] : sol.info().parameters) {
    if (k == "r1_requested") requested = v;
    if (k == "r1_realized") realized = v;
  }
  CHECK(requested == 2.2);
  CHECK(realized == doctest::Approx(oracle_n3_m1_r2_6::inner_radius).epsilon(1e-9));
}
