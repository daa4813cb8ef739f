#include "critlab/ball.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace critlab {

CriticalSolution construct_ball(const BallSpec& spec, std::size_t grid_size) {
  if (spec.n < 3) throw UnsupportedDomainError("ball: dimension must be >= 3");
  if (!(spec.radius > 0.0)) throw UnsupportedDomainError("ball: radius must be positive");
  if (spec.kind == SpaceForm::spherical && spec.radius >= 0.5 * std::numbers::pi)
    throw UnsupportedDomainError(
        "spherical ball: radius must be below pi/2 so the potential stays positive");
  if (grid_size < 64) throw UnsupportedDomainError("ball: grid size must be >= 64");

  const int n = spec.n;
  const double r0 = spec.radius;
  const std::size_t m = grid_size;
  std::vector<double> grid(m), w(m), dw(m), d2w(m), f(m), df(m), d2f(m);
  const double h = r0 / static_cast<double>(m - 1);
  for (std::size_t i = 0; i < m; ++i) grid[i] = i * h;
  grid.back() = r0;

  double scal = 0.0;
  switch (spec.kind) {
    case SpaceForm::euclidean: {
      const double c = 2.0 * (n - 1);
      for (std::size_t i = 0; i < m; ++i) {
        const double r = grid[i];
        w[i] = r; dw[i] = 1.0; d2w[i] = 0.0;
        f[i] = (r0 * r0 - r * r) / c;
        df[i] = -2.0 * r / c;
        d2f[i] = -2.0 / c;
      }
      scal = 0.0;
      break;
    }
    case SpaceForm::spherical: {
      const double c = (n - 1) * std::cos(r0);
      for (std::size_t i = 0; i < m; ++i) {
        const double r = grid[i];
        w[i] = std::sin(r); dw[i] = std::cos(r); d2w[i] = -std::sin(r);
        f[i] = (std::cos(r) - std::cos(r0)) / c;
        df[i] = -std::sin(r) / c;
        d2f[i] = -std::cos(r) / c;
      }
      scal = static_cast<double>(n) * (n - 1);
      break;
    }
    case SpaceForm::hyperbolic: {
      const double c = (n - 1) * std::cosh(r0);
      for (std::size_t i = 0; i < m; ++i) {
        const double r = grid[i];
        w[i] = std::sinh(r); dw[i] = std::cosh(r); d2w[i] = std::sinh(r);
        f[i] = (std::cosh(r0) - std::cosh(r)) / c;
        df[i] = -std::sinh(r) / c;
        d2f[i] = -std::cosh(r) / c;
      }
      scal = -static_cast<double>(n) * (n - 1);
      break;
    }
  }
  f.back() = 0.0;  // boundary value exact

  // clamp closed-form rounding so the nonnegativity invariant holds exactly
  for (double& v : f) v = std::max(v, 0.0);

  WarpedMetric metric = WarpedMetric::arc_length(n, scal, grid, w, dw, d2w);
  RadialProfile profile{std::move(grid), std::move(f), std::move(df), std::move(d2f)};

  SolutionInfo info;
  info.kind = "ball";
  info.n = n;
  info.scalar_curvature = scal;
  info.parameters = {{"radius", r0}};
  info.parameters.emplace_back("space", static_cast<double>(sectional_sign(spec.kind)));

  const double f_max = profile.f.front();
  const double d2f_at_max = profile.d2f.front();
  return CriticalSolution(std::move(metric), std::move(profile), f_max, {0.0},
                          MaxLocusKind::point, d2f_at_max, std::move(info));
}

}  // namespace critlab
