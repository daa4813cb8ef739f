#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "critlab/curvature.hpp"
#include "critlab/warped_metric.hpp"

using namespace critlab;

namespace {

// Finite-difference curvature oracle: rebuilds Ricci components from plain
// samples of the warping function alone (no stored derivatives), entirely
// independent of the library's formula path.
struct FdOracle {
  std::function<double(double)> w;
  int n;
  double ric_radial(double rho, double h = 1e-5) const {
    const double wpp = (w(rho + h) - 2.0 * w(rho) + w(rho - h)) / (h * h);
    return -(n - 1) * wpp / w(rho);
  }
  double ric_tangential(double rho, double h = 1e-5) const {
    const double wp = (w(rho + h) - w(rho - h)) / (2.0 * h);
    const double wpp = (w(rho + h) - 2.0 * w(rho) + w(rho - h)) / (h * h);
    return -wpp / w(rho) + (n - 2) * (1.0 - wp * wp) / (w(rho) * w(rho));
  }
  double scalar(double rho) const {
    return ric_radial(rho) + (n - 1) * ric_tangential(rho);
  }
};

WarpedMetric space_form_metric(SpaceForm kind, int n, double lo, double hi,
                               std::size_t m = 256) {
  std::vector<double> g(m), w(m), dw(m), d2w(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double r = lo + (hi - lo) * i / (m - 1.0);
    g[i] = r;
    switch (kind) {
      case SpaceForm::euclidean: w[i] = r; dw[i] = 1; d2w[i] = 0; break;
      case SpaceForm::spherical: w[i] = std::sin(r); dw[i] = std::cos(r); d2w[i] = -std::sin(r); break;
      case SpaceForm::hyperbolic: w[i] = std::sinh(r); dw[i] = std::cosh(r); d2w[i] = std::sinh(r); break;
    }
  }
  const double scal = n * (n - 1.0) * sectional_sign(kind);
  return WarpedMetric::arc_length(n, scal, g, w, dw, d2w);
}

}  // namespace

TEST_CASE("ricci components of the unit sphere, n = 3") {
  const auto metric = space_form_metric(SpaceForm::spherical, 3, 0.3, 2.8);
  const FdOracle oracle{[](double r) { return std::sin(r); }, 3};
  for (std::size_t i : {std::size_t(10), std::size_t(128), std::size_t(200)}) {
    const auto ric = ricci_components(metric, i);
    CHECK(ric.radial == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ric.tangential == doctest::Approx(2.0).epsilon(1e-12));
    const double rho = metric.grid()[i];
    CHECK(oracle.ric_radial(rho) == doctest::Approx(ric.radial).epsilon(1e-6));
    CHECK(oracle.ric_tangential(rho) == doctest::Approx(ric.tangential).epsilon(1e-6));
  }
}

TEST_CASE("flat space has vanishing curvature, n = 4") {
  const auto metric = space_form_metric(SpaceForm::euclidean, 4, 0.1, 3.0);
  for (std::size_t i = 1; i + 1 < metric.size(); i += 37) {
    const auto ric = ricci_components(metric, i);
    CHECK(std::abs(ric.radial) < 1e-14);
    CHECK(std::abs(ric.tangential) < 1e-14);
  }
}

TEST_CASE("hyperbolic space Ricci = -2, n = 3, against the oracle") {
  const auto metric = space_form_metric(SpaceForm::hyperbolic, 3, 0.2, 2.5);
  const FdOracle oracle{[](double r) { return std::sinh(r); }, 3};
  const auto ric = ricci_components(metric, 100);
  CHECK(ric.radial == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(ric.tangential == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(oracle.scalar(metric.grid()[100]) == doctest::Approx(-6.0).epsilon(1e-5));
}

TEST_CASE("scalar curvature spot values") {
  CHECK(scalar_curvature(space_form_metric(SpaceForm::spherical, 3, 0.3, 2.8), 55) ==
        doctest::Approx(6.0).epsilon(1e-12));
  CHECK(std::abs(scalar_curvature(space_form_metric(SpaceForm::euclidean, 5, 0.1, 3.0), 99)) <
        1e-13);
}

TEST_CASE("spatial lapse 1 - 2/r is scalar flat on the grid") {
  const std::size_t m = 512;
  std::vector<double> g(m), v(m), dv(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double r = 2.2 + (6.0 - 2.2) * i / (m - 1.0);
    g[i] = r;
    v[i] = 1.0 - 2.0 / r;
    dv[i] = 2.0 / (r * r);
  }
  const auto metric = WarpedMetric::areal_radius(3, 0.0, g, v, dv);
  for (std::size_t i = 0; i < m; i += 41)
    CHECK(std::abs(scalar_curvature(metric, i)) < 1e-13);
  CHECK(metric.scalar_constancy_deviation() < 1e-13);
}

TEST_CASE("AdS lapse gives constant scalar curvature -n(n-1)") {
  const std::size_t m = 256;
  std::vector<double> g(m), v(m), dv(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double r = 1.3 + (4.0 - 1.3) * i / (m - 1.0);
    g[i] = r;
    v[i] = 1.0 + r * r - 2.0 / r;
    dv[i] = 2.0 * r + 2.0 / (r * r);
  }
  const auto metric = WarpedMetric::areal_radius(3, -6.0, g, v, dv);
  CHECK(metric.scalar_constancy_deviation() < 1e-12);
}

TEST_CASE("fd scalar-curvature oracle converges at order two") {
  // sampled warping only, derivatives by differencing: halving the step
  // shrinks the worst deviation from the analytic value by ~4
  auto fd_error = [](std::size_t m) {
    const double lo = 0.02, hi = std::numbers::pi - 0.02;
    const double h = (hi - lo) / (m - 1.0);
    std::vector<double> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = std::sin(lo + i * h);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < m; ++i) {
      const double wp = (w[i + 1] - w[i - 1]) / (2 * h);
      const double wpp = (w[i + 1] - 2 * w[i] + w[i - 1]) / (h * h);
      const double scal = -4.0 * wpp / w[i] + 2.0 * (1 - wp * wp) / (w[i] * w[i]);
      if (w[i] > 0.05) worst = std::max(worst, std::abs(scal - 6.0));
    }
    return worst;
  };
  const double e1 = fd_error(1000), e2 = fd_error(2000);
  CHECK(e1 / e2 > 3.5);
  CHECK(e1 / e2 < 4.5);
}

TEST_CASE("hessian and laplacian of radial profiles") {
  SUBCASE("euclidean areal gauge, f = (1 - r^2)/4 at n = 3") {
    const std::size_t m = 128;
    std::vector<double> g(m), v(m, 1.0), dv(m, 0.0), f(m), df(m), d2f(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double r = 0.05 + 0.9 * i / (m - 1.0);
      g[i] = r;
      f[i] = (1 - r * r) / 4;
      df[i] = -r / 2;
      d2f[i] = -0.5;
    }
    const auto metric = WarpedMetric::areal_radius(3, 0.0, g, v, dv);
    const RadialProfile prof{g, f, df, d2f};
    const auto h = hessian_laplacian(metric, prof, 64);
    CHECK(h.radial == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(h.tangential == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(h.laplacian == doctest::Approx(-1.5).epsilon(1e-14));
  }
  SUBCASE("constant profile has vanishing hessian") {
    const auto metric = space_form_metric(SpaceForm::spherical, 3, 0.3, 2.8);
    const std::size_t m = metric.size();
    RadialProfile prof{metric.grid(), std::vector<double>(m, 2.0),
                       std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
    const auto h = hessian_laplacian(metric, prof, 40);
    CHECK(h.radial == 0.0);
    CHECK(h.tangential == 0.0);
    CHECK(h.laplacian == 0.0);
  }
  SUBCASE("f = cos(rho) - 1/2 on the unit 3-sphere at rho = pi/4") {
    const std::size_t m = 257;
    const double lo = 0.1, hi = 3.0;
    std::vector<double> g(m), w(m), dw(m), d2w(m), f(m), df(m), d2f(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double r = lo + (hi - lo) * i / (m - 1.0);
      g[i] = r;
      w[i] = std::sin(r); dw[i] = std::cos(r); d2w[i] = -std::sin(r);
      f[i] = std::cos(r) + 0.6;  // kept positive; shift is harmless to Hess
      df[i] = -std::sin(r);
      d2f[i] = -std::cos(r);
    }
    const auto metric = WarpedMetric::arc_length(3, 6.0, g, w, dw, d2w);
    const RadialProfile prof{g, f, df, d2f};
    // nearest grid point to pi/4
    std::size_t i_q = 0;
    double best = 1e9;
    for (std::size_t i = 0; i < m; ++i)
      if (std::abs(g[i] - std::numbers::pi / 4) < best) {
        best = std::abs(g[i] - std::numbers::pi / 4);
        i_q = i;
      }
    const auto h = hessian_laplacian(metric, prof, i_q);
    CHECK(h.laplacian == doctest::Approx(-3.0 * std::cos(g[i_q])).epsilon(1e-12));
    CHECK(-3.0 * std::cos(std::numbers::pi / 4) == doctest::Approx(-2.121320).epsilon(1e-6));
  }
}

TEST_CASE("malformed metrics are rejected") {
  std::vector<double> g(64), w(64), dw(64), d2w(64);
  for (std::size_t i = 0; i < 64; ++i) {
    g[i] = 0.1 + i * 0.01;
    w[i] = g[i];
    dw[i] = 1.0;
    d2w[i] = 0.0;
  }
  SUBCASE("non-finite data") {
    w[10] = std::nan("");
    CHECK_THROWS_AS(WarpedMetric::arc_length(3, 0.0, g, w, dw, d2w),
                    MalformedMetricError);
  }
  SUBCASE("nonpositive warping in the interior") {
    w[10] = -0.1;
    CHECK_THROWS_AS(WarpedMetric::arc_length(3, 0.0, g, w, dw, d2w),
                    MalformedMetricError);
  }
  SUBCASE("inconsistent scalar curvature") {
    CHECK_THROWS_AS(WarpedMetric::arc_length(3, 6.0, g, w, dw, d2w),
                    InconsistentMetricError);
  }
  SUBCASE("non-monotone grid") {
    std::swap(g[5], g[6]);
    CHECK_THROWS_AS(WarpedMetric::arc_length(3, 0.0, g, w, dw, d2w),
                    MalformedMetricError);
  }
}
