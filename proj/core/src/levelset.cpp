#include "critlab/levelset.hpp"

#include <algorithm>
#include <cmath>

#include "critlab/curvature.hpp"
#include "critlab/numerics.hpp"

namespace critlab {

namespace {

constexpr double kRegularGrad = 1e-12;

struct ComponentGeometry {
  double boundary_end;  // endpoint where f is smallest (touches the boundary)
  double max_end;       // endpoint on MAX(f)
};

ComponentGeometry component_geometry(const CriticalSolution& sol, std::size_t k) {
  const auto& [a, b] = sol.components().at(k);
  const double fa = sol.f_at(a), fb = sol.f_at(b);
  return (fa < fb) ? ComponentGeometry{a, b} : ComponentGeometry{b, a};
}

double h_of(const CriticalSolution& sol, double t) {
  const int n = sol.dimension();
  const double scal = sol.scalar_curvature_constant();
  const double fm = sol.f_max();
  return (scal * (fm * fm - t * t) + 2.0 * n * (fm - t)) / (n * (n - 1.0));
}

// grid coordinate of the level crossing {f = t} within component k
double level_coordinate(const CriticalSolution& sol, std::size_t k, double t) {
  if (t < 0.0 || t >= sol.f_max())
    throw LevelSetError("level value outside [0, f_max)");
  const ComponentGeometry geo = component_geometry(sol, k);
  if (t == 0.0) return geo.boundary_end;
  const double lo = std::min(geo.boundary_end, geo.max_end);
  const double hi = std::max(geo.boundary_end, geo.max_end);
  return find_root([&](double u) { return sol.f_at(u) - t; }, lo, hi, 1e-15);
}

double grad_norm_at(const CriticalSolution& sol, double u) {
  return std::abs(sol.df_at(u)) * sol.du_drho_at(u);
}

}  // namespace

double level_set_flux(const CriticalSolution& sol, std::size_t component, double t) {
  const double u = level_coordinate(sol, component, t);
  const double grad = grad_norm_at(sol, u);
  if (grad < kRegularGrad)
    throw LevelSetError("level value is not regular (|grad f| below 1e-12)");
  const int n = sol.dimension();
  return grad * unit_sphere_area(n) * std::pow(sol.warping_at(u), n - 1);
}

FTrace f_functional(const CriticalSolution& sol, std::size_t component,
                    std::vector<double> t_grid) {
  if (t_grid.empty()) {
    const double top = 0.98 * sol.f_max();
    t_grid.resize(64);
    for (std::size_t i = 0; i < 64; ++i) t_grid[i] = top * i / 63.0;
  }
  FTrace trace;
  trace.component = component;
  const double hn = -0.5 * sol.dimension();
  for (double t : t_grid) {
    const double u = level_coordinate(sol, component, t);
    if (grad_norm_at(sol, u) < kRegularGrad) continue;  // screened critical level
    const double h = h_of(sol, t);
    if (!(h > 0.0))
      throw LevelSetError("h(t) must be positive below f_max");
    trace.t_grid.push_back(t);
    trace.h_values.push_back(h);
    trace.F_values.push_back(std::pow(h, hn) * level_set_flux(sol, component, t));
  }
  return trace;
}

CheckReport monotonicity_check(const FTrace& trace, bool hypothesis_ok, double tol) {
  std::size_t violations = 0;
  double worst_increase = 0.0;
  for (std::size_t i = 0; i + 1 < trace.F_values.size(); ++i) {
    const double allowed = tol * std::abs(trace.F_values[i]);
    const double inc = trace.F_values[i + 1] - trace.F_values[i];
    if (inc > allowed) {
      ++violations;
      worst_increase = std::max(worst_increase, inc / std::abs(trace.F_values[i]));
    }
  }
  CheckReport r;
  r.name = "monotonicity[" + std::to_string(trace.component) + "]";
  r.paper_anchor = "Lemma 3.1";
  r.lhs = static_cast<double>(violations);
  r.rhs = 0.0;
  r.residual = worst_increase;
  r.tol = tol;
  r.status = hypothesis_ok
                 ? (violations == 0 ? CheckStatus::pass : CheckStatus::fail)
                 : CheckStatus::informational;
  return r;
}

BlowupReport blowup_check(const CriticalSolution& sol, std::size_t component) {
  BlowupReport rep;
  rep.kind = sol.max_kind();
  const double fm = sol.f_max();
  const int n = sol.dimension();

  std::vector<double> log_u, log_F, log_B;
  std::vector<double> F;
  for (int k = 4; k <= 14; ++k) {
    const double t = fm * (1.0 - std::pow(2.0, -k));
    const double u = level_coordinate(sol, component, t);
    const double flux = level_set_flux(sol, component, t);
    const double h = h_of(sol, t);
    const double area =
        unit_sphere_area(n) * std::pow(sol.warping_at(u), n - 1);
    F.push_back(std::pow(h, -0.5 * n) * flux);
    log_u.push_back(std::log(fm - t));
    log_F.push_back(std::log(F.back()));
    log_B.push_back(std::log(std::pow(h, -0.5 * n) * (fm - t) * area));
  }
  rep.ratio = F.back() / F.front();
  rep.tail_increasing = true;
  for (std::size_t i = F.size() - 5; i + 1 < F.size(); ++i)
    rep.tail_increasing = rep.tail_increasing && F[i + 1] > F[i];
  rep.bound_exponent = fit_slope(log_u, log_B);
  rep.f_exponent = fit_slope(log_u, log_F);

  if (rep.kind == MaxLocusKind::point) {
    rep.status = (rep.ratio <= 10.0) ? CheckStatus::pass : CheckStatus::fail;
  } else {
    bool ok = rep.ratio >= 10.0 && rep.tail_increasing;
    // divergence rate of the lower bound; the +-0.1 band is pinned for n = 3
    if (n == 3) ok = ok && std::abs(rep.bound_exponent + 0.5) <= 0.1;
    // F must diverge at least as fast as its lower bound
    ok = ok && rep.f_exponent <= rep.bound_exponent + 0.1;
    rep.status = ok ? CheckStatus::pass : CheckStatus::fail;
  }
  return rep;
}

LojasiewiczFit lojasiewicz_fit(const CriticalSolution& sol, std::size_t component) {
  if (std::abs(sol.d2f_at_max()) < 1e-10)
    throw InconclusiveError("lojasiewicz_fit: degenerate maximum");
  const double fm = sol.f_max();
  LojasiewiczFit fit;
  fit.window_lo = 0.9 * fm;
  fit.window_hi = 0.999 * fm;
  const std::size_t samples = 48;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < samples; ++i) {
    // geometric spacing of u = f_max - f across [1e-3, 1e-1] * f_max
    const double frac = static_cast<double>(i) / (samples - 1);
    const double u_gap = 1e-3 * fm * std::pow(100.0, frac);
    const double t = fm - u_gap;
    const double uc = level_coordinate(sol, component, t);
    const double grad = grad_norm_at(sol, uc);
    if (grad < kRegularGrad) continue;
    lx.push_back(std::log(u_gap));
    ly.push_back(2.0 * std::log(grad));
  }
  fit.samples = lx.size();
  if (fit.samples < 16)
    throw InconclusiveError("lojasiewicz_fit: too few regular samples in window");
  fit.theta_hat = fit_slope(lx, ly);
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) { mean_x += lx[i]; mean_y += ly[i]; }
  mean_x /= lx.size(); mean_y /= ly.size();
  fit.c_hat = std::exp(mean_y - fit.theta_hat * mean_x);
  fit.conclusive = true;
  return fit;
}

double coarea_cross_check(const CriticalSolution& sol, std::size_t component,
                          double t) {
  const double flux = level_set_flux(sol, component, t);
  const ComponentGeometry geo = component_geometry(sol, component);
  const double u_t = level_coordinate(sol, component, t);
  const double lo = std::min(u_t, geo.max_end);
  const double hi = std::max(u_t, geo.max_end);
  const int n = sol.dimension();
  const std::size_t m = 4097;
  std::vector<double> integrand(m);
  const double h = (hi - lo) / (m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    const double u = lo + i * h;
    const double j = sol.du_drho_at(u);
    const double w = sol.warping_at(u);
    const double wn = std::pow(w, n - 1);
    if (wn == 0.0) {  // collapsed orbit sphere at a coordinate center
      integrand[i] = 0.0;
      continue;
    }
    const double f_rho = j * sol.df_at(u);
    const double lap =
        sol.frame_second_at(u) + (n - 1) * (sol.warping_rho_at(u) / w) * f_rho;
    integrand[i] = lap * unit_sphere_area(n) * wn / j;
  }
  const double vol_integral = simpson(integrand, h);
  return std::abs(flux + vol_integral) / std::max(std::abs(flux), 1e-14);
}

}  // namespace critlab
