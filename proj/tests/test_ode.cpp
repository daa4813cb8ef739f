#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "critlab/ode.hpp"

using namespace critlab;

TEST_CASE("dop853 integrates the exponential to tolerance") {
  Dop853<1> ode([](double, const std::array<double, 1>& y,
                   std::array<double, 1>& dy) { dy[0] = y[0]; },
                1e-12, 1e-12);
  const auto y = ode.integrate(0.0, {1.0}, 5.0);
  CHECK(y[0] == doctest::Approx(std::exp(5.0)).epsilon(1e-11));
}

TEST_CASE("dop853 integrates the harmonic oscillator over many periods") {
  Dop853<2> ode([](double, const std::array<double, 2>& y,
                   std::array<double, 2>& dy) {
    dy[0] = y[1];
    dy[1] = -y[0];
  });
  const double t1 = 20.0 * std::numbers::pi;
  const auto y = ode.integrate(0.0, {1.0, 0.0}, t1);
  CHECK(y[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(y[1]) < 1e-9);
}

TEST_CASE("visitor early stop returns the state at the stopping step") {
  Dop853<1> ode([](double, const std::array<double, 1>& y,
                   std::array<double, 1>& dy) { dy[0] = y[0]; });
  double t_stop = 0.0;
  const auto y = ode.integrate(0.0, {1.0}, 50.0,
                               [&](double t, const std::array<double, 1>& y) {
                                 t_stop = t;
                                 return y[0] < 100.0;
                               });
  CHECK(y[0] >= 100.0);
  CHECK(y[0] == doctest::Approx(std::exp(t_stop)).epsilon(1e-10));
}

TEST_CASE("fixed steps land on machine-accurate values for smooth systems") {
  Dop853<2> ode([](double, const std::array<double, 2>& y,
                   std::array<double, 2>& dy) {
    dy[0] = y[1];
    dy[1] = -y[0];
  });
  // node-to-node marching at the default grid spacing
  std::array<double, 2> y{0.0, 1.0};
  const int n = 2047;
  const double h = 3.0 / n;
  for (int i = 0; i < n; ++i) y = ode.fixed_step(i * h, y, h);
  CHECK(y[0] == doctest::Approx(std::sin(3.0)).epsilon(1e-13));
  CHECK(y[1] == doctest::Approx(std::cos(3.0)).epsilon(1e-13));
}

TEST_CASE("integration is linear in the initial data") {
  // superposition of two solutions of a linear system matches a single
  // combined solve to integrator accuracy
  auto rhs = [](double t, const std::array<double, 2>& y,
                std::array<double, 2>& dy) {
    dy[0] = y[1];
    dy[1] = -y[0] / (1.0 + t * t);
  };
  Dop853<2> ode(rhs);
  const auto a = ode.integrate(0.0, {1.0, 0.0}, 4.0);
  const auto b = ode.integrate(0.0, {0.0, 1.0}, 4.0);
  const auto c = ode.integrate(0.0, {2.0, -3.0}, 4.0);
  CHECK(c[0] == doctest::Approx(2 * a[0] - 3 * b[0]).epsilon(1e-11));
  CHECK(c[1] == doctest::Approx(2 * a[1] - 3 * b[1]).epsilon(1e-11));
}
