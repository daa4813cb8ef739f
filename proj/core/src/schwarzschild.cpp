#include "critlab/schwarzschild.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "critlab/curvature.hpp"
#include "critlab/numerics.hpp"
#include "critlab/ode.hpp"

namespace critlab {

namespace {

struct Lapse {
  int n;
  double mass;
  bool ads;
  double value(double w) const {
    return 1.0 - 2.0 * mass * std::pow(w, 2 - n) + (ads ? w * w : 0.0);
  }
  double slope(double w) const {
    return 2.0 * mass * (n - 2) * std::pow(w, 1 - n) + (ads ? 2.0 * w : 0.0);
  }
};

// state: (w, w', f_p, f_p', u, u') with s the arc length.
//   w''  = V'(w)/2
//   f''  = f Ric_ss - (R f + 1)/(n-1),  Ric_ss = -(n-1) w''/w
//   u''  = u Ric_ss - R u/(n-1)
using State6 = std::array<double, 6>;

struct RadialSystem {
  Lapse lapse;
  double scal;
  void operator()(double, const State6& y, State6& dy) const {
    const int n = lapse.n;
    const double w = y[0];
    const double wpp = 0.5 * lapse.slope(w);
    const double ric_ss = -(n - 1) * wpp / w;
    dy[0] = y[1];
    dy[1] = wpp;
    dy[2] = y[3];
    dy[3] = y[2] * ric_ss - (scal * y[2] + 1.0) / (n - 1);
    dy[4] = y[5];
    dy[5] = y[4] * ric_ss - scal * y[4] / (n - 1);
  }
};

}  // namespace

double schwarzschild_horizon(int n, double mass, bool ads) {
  if (n < 3) throw UnsupportedDomainError("schwarzschild: dimension must be >= 3");
  if (!(mass > 0.0)) throw UnsupportedDomainError("schwarzschild: mass must be positive");
  if (!ads) return std::pow(2.0 * mass, 1.0 / (n - 2));
  // V(r) = 1 + r^2 - 2m r^{2-n} is increasing for r > 0: bisect its zero
  Lapse lap{n, mass, true};
  double lo = 1e-9, hi = std::pow(2.0 * mass, 1.0 / (n - 2)) + 1.0;
  while (lap.value(hi) < 0.0) hi *= 2.0;
  return find_root([&](double r) { return lap.value(r); }, lo, hi, 1e-15);
}

CriticalSolution construct_schwarzschild(const SchwarzschildSpec& spec,
                                         std::size_t grid_size) {
  SchwarzschildOptions opt;
  opt.grid_size = grid_size;
  return construct_schwarzschild(spec, opt);
}

CriticalSolution construct_schwarzschild(const SchwarzschildSpec& spec,
                                         const SchwarzschildOptions& opt) {
  const int n = spec.n;
  if (n < 3) throw UnsupportedDomainError("schwarzschild: dimension must be >= 3");
  if (!(spec.mass > 0.0))
    throw UnsupportedDomainError("schwarzschild: mass must be positive");
  if (opt.grid_size < 64)
    throw UnsupportedDomainError("schwarzschild: grid size must be >= 64");
  if (!(spec.r1 < spec.r2))
    throw DomainError("schwarzschild: need r1 < r2 (empty domain)");

  const Lapse lapse{n, spec.mass, spec.ads};
  const double r_h = schwarzschild_horizon(n, spec.mass, spec.ads);
  if (spec.r1 < r_h * (1.0 + 1e-6) || lapse.value(spec.r1) <= 0.0)
    throw DomainError("schwarzschild: inner radius lies at or inside the horizon");
  if (lapse.value(spec.r2) <= 0.0)
    throw DomainError("schwarzschild: lapse not positive at the outer radius");

  const double scal = spec.ads ? -static_cast<double>(n) * (n - 1) : 0.0;
  const RadialSystem sys{lapse, scal};
  Dop853<6> ode([sys](double s, const State6& y, State6& dy) { sys(s, y, dy); },
                1e-12, 1e-12);

  // start at the outer sphere, moving inward (areal radius decreasing)
  const double v2 = lapse.value(spec.r2);
  State6 y0{spec.r2, -std::sqrt(v2), 0.0, 0.0, 0.0, opt.homogeneous_seed};

  // superposition weight making the tangential component of the system hold
  // at s = 0; f' (0) = r2 / ((n-1) sqrt(V(r2)))
  const double slope0 = spec.r2 / ((n - 1) * std::sqrt(v2));
  const double c = slope0 / opt.homogeneous_seed;
  auto f_of = [&](const State6& y) { return y[2] + c * y[4]; };

  // phase 1: march until the superposed potential crosses zero from above
  double s_lo = 0.0, s_hi = 0.0;
  State6 y_lo = y0;
  bool bracketed = false;
  {
    double s_prev = 0.0;
    State6 y_prev = y0;
    const double s_cap = 64.0 * (spec.r2 - r_h + 1.0);
    ode.integrate(0.0, y0, s_cap, [&](double s, const State6& y) {
      if (s > 0.0 && f_of(y) <= 0.0) {
        s_lo = s_prev; y_lo = y_prev;
        s_hi = s;
        bracketed = true;
        return false;
      }
      s_prev = s; y_prev = y;
      return true;
    });
    if (!bracketed)
      throw NoPositiveSolutionError(
          "schwarzschild: potential does not return to zero (no compact domain)");
  }

  // phase 2: polish the far zero by bisection on single fixed steps
  double a = s_lo, b = s_hi;
  for (int it = 0; it < 200 && (b - a) > 1e-15 * (1.0 + b); ++it) {
    const double mid = 0.5 * (a + b);
    const State6 ym = ode.fixed_step(s_lo, y_lo, mid - s_lo);
    if (f_of(ym) > 0.0) a = mid; else b = mid;
  }
  const double s_end = 0.5 * (a + b);
  {
    const State6 ye = ode.fixed_step(s_lo, y_lo, s_end - s_lo);
    const double r1_actual = ye[0];
    if (std::abs(ye[3] + c * ye[5]) < 1e-10)
      throw DegenerateBoundaryError("schwarzschild: degenerate inner boundary");
    if (std::abs(r1_actual - spec.r1) > opt.inner_radius_window * spec.r1)
      throw DomainError(
          "schwarzschild: realized inner radius " + std::to_string(r1_actual) +
          " is outside the acceptance window around requested r1 = " +
          std::to_string(spec.r1) +
          " (boundary radii pair up one-to-one at fixed mass)");
  }

  // phase 3: resample the superposed solution on the uniform grid
  const std::size_t m = opt.grid_size;
  std::vector<double> grid(m), w(m), dw(m), d2w(m), f(m), df(m), d2f(m);
  const double h = s_end / static_cast<double>(m - 1);
  for (std::size_t i = 0; i < m; ++i) grid[i] = i * h;
  grid.back() = s_end;

  std::size_t fill = 0;
  double tangential_residual = 0.0;
  auto record = [&](double s, const State6& y) {
    while (fill < m && grid[fill] <= s + 1e-13 * (1.0 + s)) {
      // visit callbacks land exactly on the nodes (step clamping below)
      const std::size_t i = fill;
      const double wpp = 0.5 * lapse.slope(y[0]);
      const double ric_ss = -(n - 1) * wpp / y[0];
      const double ric_tt =
          -wpp / y[0] + (n - 2) * (1.0 - y[1] * y[1]) / (y[0] * y[0]);
      w[i] = y[0]; dw[i] = y[1]; d2w[i] = wpp;
      f[i] = f_of(y);
      df[i] = y[3] + c * y[5];
      d2f[i] = f[i] * ric_ss - (scal * f[i] + 1.0) / (n - 1);
      const double tan_res =
          (y[1] / y[0]) * df[i] - f[i] * ric_tt + (scal * f[i] + 1.0) / (n - 1);
      tangential_residual = std::max(tangential_residual, std::abs(tan_res));
      ++fill;
    }
  };
  // integrate node-to-node so every grid point is an exact step endpoint
  {
    State6 y = y0;
    record(0.0, y);
    for (std::size_t i = 1; i < m; ++i) {
      y = ode.fixed_step(grid[i - 1], y, grid[i] - grid[i - 1]);
      record(grid[i], y);
    }
  }
  if (fill != m)
    throw Error("schwarzschild: internal resampling failure");
  f.front() = 0.0;
  f.back() = 0.0;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (f[i] <= 0.0)
      throw NoPositiveSolutionError(
          "schwarzschild: potential not positive across the interior");
  }
  if (tangential_residual > opt.consistency_tol)
    throw NotCriticalError(
        "schwarzschild: tangential consistency residual " +
        std::to_string(tangential_residual) + " exceeds tolerance");

  // locate the interior maximum sphere: root of f' between the boundaries
  std::size_t i_max = 1;
  for (std::size_t i = 1; i + 1 < m; ++i)
    if (f[i] > f[i_max]) i_max = i;
  QuinticHermite fs(grid, f, df, d2f);
  const double bracket_lo = grid[i_max > 0 ? i_max - 1 : 0];
  const double bracket_hi = grid[std::min(i_max + 1, m - 1)];
  const double s_star =
      find_root([&](double s) { return fs.derivative(s); }, bracket_lo, bracket_hi, 1e-15);
  const double f_max = fs.value(s_star);
  const double d2f_star = fs.second_derivative(s_star);
  if (std::abs(d2f_star) < 1e-10)
    throw InconclusiveError("schwarzschild: degenerate interior maximum");

  WarpedMetric metric = WarpedMetric::arc_length(n, scal, grid, w, dw, d2w);
  RadialProfile profile{std::move(grid), std::move(f), std::move(df), std::move(d2f)};

  SolutionInfo info;
  info.kind = "schwarzschild";
  info.n = n;
  info.scalar_curvature = scal;
  info.parameters = {{"mass", spec.mass},
                     {"r1_requested", spec.r1},
                     {"r1_realized", w.back()},
                     {"r2", spec.r2},
                     {"ads", spec.ads ? 1.0 : 0.0},
                     {"horizon", r_h},
                     {"arc_length", s_end},
                     {"tangential_consistency", tangential_residual}};

  return CriticalSolution(std::move(metric), std::move(profile), f_max, {s_star},
                          MaxLocusKind::sphere, d2f_star, std::move(info));
}

}  // namespace critlab
