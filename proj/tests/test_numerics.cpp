#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "critlab/numerics.hpp"

using namespace critlab;

TEST_CASE("simpson integrates smooth functions at fourth order") {
  auto integrate_sin = [](std::size_t m) {
    std::vector<double> y(m);
    const double h = std::numbers::pi / (m - 1);
    for (std::size_t i = 0; i < m; ++i) y[i] = std::sin(i * h);
    return simpson(y, h);
  };
  const double e1 = std::abs(integrate_sin(129) - 2.0);
  const double e2 = std::abs(integrate_sin(257) - 2.0);
  CHECK(e1 < 1e-8);
  CHECK(e1 / e2 > 12.0);  // ~16 for order 4
}

TEST_CASE("simpson handles an odd interval count") {
  // 2048 points = 2047 intervals, exercised by the default grid size
  const std::size_t m = 2048;
  std::vector<double> y(m);
  const double h = 1.0 / (m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = i * h;
    y[i] = x * x * x;
  }
  CHECK(simpson(y, h) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("central derivative is second order") {
  auto deriv_err = [](std::size_t m) {
    std::vector<double> y(m);
    const double h = 1.0 / (m - 1);
    for (std::size_t i = 0; i < m; ++i) y[i] = std::exp(i * h);
    const auto d = central_derivative(y, h);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < m; ++i)
      worst = std::max(worst, std::abs(d[i] - std::exp(i * h)));
    return worst;
  };
  const double e1 = deriv_err(101), e2 = deriv_err(201);
  CHECK(e1 / e2 > 3.5);
  CHECK(e1 / e2 < 4.5);
}

TEST_CASE("find_root locates a bracketed zero") {
  const double r = find_root([](double x) { return std::cos(x); }, 1.0, 2.0);
  CHECK(r == doctest::Approx(std::numbers::pi / 2).epsilon(1e-13));
  CHECK_THROWS(find_root([](double x) { return 1.0 + x * x; }, -1.0, 1.0));
}

TEST_CASE("fit_slope recovers an exact linear relation") {
  std::vector<double> x, y;
  for (int i = 0; i < 20; ++i) {
    x.push_back(0.1 * i);
    y.push_back(3.0 - 2.5 * 0.1 * i);
  }
  CHECK(fit_slope(x, y) == doctest::Approx(-2.5).epsilon(1e-12));
}

TEST_CASE("quintic hermite reproduces values and derivatives") {
  const std::size_t m = 64;
  std::vector<double> x(m), f(m), df(m), d2f(m);
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = i / (m - 1.0) * 2.0;
    f[i] = std::sin(x[i]);
    df[i] = std::cos(x[i]);
    d2f[i] = -std::sin(x[i]);
  }
  const QuinticHermite s(x, f, df, d2f);
  double worst_f = 0.0, worst_df = 0.0;
  for (int k = 0; k < 400; ++k) {
    const double u = 2.0 * k / 399.0;
    worst_f = std::max(worst_f, std::abs(s.value(u) - std::sin(u)));
    worst_df = std::max(worst_df, std::abs(s.derivative(u) - std::cos(u)));
  }
  CHECK(worst_f < 1e-12);
  CHECK(worst_df < 1e-10);
}
