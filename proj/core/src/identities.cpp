#include "critlab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "critlab/curvature.hpp"
#include "critlab/numerics.hpp"

namespace critlab {

namespace {

// Radial divergence of a field X = X_rho e_rho from grid samples of X_rho:
// div X = (1/w^{n-1}) d/drho (w^{n-1} X_rho). The bracket is differentiated
// in the grid coordinate and converted by du/drho.
std::vector<double> radial_divergence(const CriticalSolution& sol,
                                      std::span<const double> x_rho) {
  const auto& metric = sol.metric();
  const int n = metric.dimension();
  const std::size_t m = metric.size();
  std::vector<double> g(m);
  for (std::size_t i = 0; i < m; ++i)
    g[i] = std::pow(metric.at(i).w, n - 1) * x_rho[i];
  std::vector<double> dg = central_derivative(g, metric.grid_step());
  std::vector<double> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    const MetricPoint p = metric.at(i);
    out[i] = dg[i] * p.du_drho / std::pow(p.w, n - 1);
  }
  return out;
}

struct PointData {
  double f, f_rho, f_rhorho, lap, hess_o_sq;
};

PointData point_data(const CriticalSolution& sol, std::size_t i) {
  const auto& metric = sol.metric();
  const auto& prof = sol.potential();
  const int n = metric.dimension();
  const MetricPoint p = metric.at(i);
  const auto d = frame_derivatives(metric, prof, i);
  const double hess_tan =
      (p.w == 0.0) ? d.f_rhorho : (p.w_rho / p.w) * d.f_rho;
  const double lap = d.f_rhorho + (n - 1) * hess_tan;
  return {prof.f[i], d.f_rho, d.f_rhorho, lap,
          traceless_norm_sq(n, d.f_rhorho, hess_tan)};
}

}  // namespace

double robinson_shen_residual(const CriticalSolution& sol, double f_floor) {
  if (!(f_floor > 0.0))
    throw DomainError("robinson_shen_residual: f_floor must be positive");
  const auto& metric = sol.metric();
  const int n = metric.dimension();
  const std::size_t m = metric.size();

  std::vector<double> x_rho(m);
  for (std::size_t i = 0; i < m; ++i) {
    const PointData q = point_data(sol, i);
    const double fv = q.f > 0.0 ? q.f : 1.0;  // masked below
    x_rho[i] = (2.0 * q.f_rho * (q.f_rhorho - q.lap / n)) / fv;
  }
  const auto div_x = radial_divergence(sol, x_rho);

  double worst = -1.0;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const PointData q = point_data(sol, i);
    if (q.f < f_floor) continue;
    const double rhs = 2.0 / q.f * q.hess_o_sq;
    worst = std::max(worst, std::abs(div_x[i] - rhs));
  }
  if (worst < 0.0)
    throw DomainError("robinson_shen_residual: no grid points above the floor");
  return worst;
}

PhiProfile phi_profile(const CriticalSolution& sol, double f_floor_fraction) {
  const auto& metric = sol.metric();
  const int n = metric.dimension();
  const double scal = metric.scalar_curvature_constant();
  const std::size_t m = metric.size();
  PhiProfile out;
  out.grid = metric.grid();
  out.phi.resize(m);
  out.f_floor = f_floor_fraction * sol.f_max();

  for (std::size_t i = 0; i < m; ++i) {
    const PointData q = point_data(sol, i);
    const double grad_sq = q.f_rho * q.f_rho;
    out.phi[i] = (scal == 0.0)
                     ? grad_sq + 2.0 * q.f / (n - 1)
                     : grad_sq + (n - 1) * q.lap * q.lap / (n * scal);
  }

  // elliptic expression lap Phi - <grad f, grad Phi>/f with grid derivatives
  const double h = metric.grid_step();
  const auto dphi = central_derivative(out.phi, h);
  const auto d2phi = central_derivative(dphi, h);
  double ell_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 2; i + 2 < m; ++i) {
    const PointData q = point_data(sol, i);
    if (q.f < out.f_floor) continue;
    const MetricPoint p = metric.at(i);
    const double j = p.du_drho;
    // chain rule: d/drho = j d/du; d2/drho2 needs dj/du, available exactly
    double dj_du = 0.0;
    if (metric.gauge() == Gauge::areal_radius)
      dj_du = p.w_rhorho / p.du_drho;  // (sqrt V)' = V'/(2 sqrt V)
    const double phi_rho = j * dphi[i];
    const double phi_rhorho = j * (dj_du * dphi[i] + j * d2phi[i]);
    const double lap_phi = phi_rhorho + (n - 1) * (p.w_rho / p.w) * phi_rho;
    const double ell = lap_phi - (q.f_rho / q.f) * phi_rho;
    ell_min = std::min(ell_min, ell);
  }
  out.elliptic_min = ell_min;

  out.interior_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < m; ++i)
    out.interior_max = std::max(out.interior_max, out.phi[i]);
  out.boundary_max = std::max(out.phi.front(), out.phi.back());
  const auto [mn, mx] = std::minmax_element(out.phi.begin(), out.phi.end());
  out.spread = *mx - *mn;

  const double fm = sol.f_max();
  out.max_locus_value =
      (scal == 0.0) ? 2.0 * fm / (n - 1)
                    : (n - 1) / (n * scal) *
                          std::pow((scal * fm + n) / (n - 1), 2);
  return out;
}

std::vector<CheckReport> gauss_equation_check(const CriticalSolution& sol,
                                              double tol) {
  const auto& metric = sol.metric();
  const int n = metric.dimension();
  const double scal = metric.scalar_curvature_constant();
  std::vector<CheckReport> out;
  const std::size_t last = metric.size() - 1;
  for (std::size_t k = 0; k < sol.boundary().size(); ++k) {
    const auto& bc = sol.boundary()[k];
    const std::size_t i = bc.outward_is_positive ? last : 0;
    const auto ric = ricci_components(metric, i);
    const double lhs = 2.0 * ric.radial + bc.intrinsic_scalar;
    const double rhs =
        scal + (n - 2) / (n - 1.0) * bc.mean_curvature * bc.mean_curvature;
    out.push_back(CheckReport::asserted("gauss_equation[" + std::to_string(k) + "]",
                                        "Eq. (2.9)", lhs, rhs,
                                        std::abs(lhs - rhs), tol));
  }
  return out;
}

CheckReport divergence_balance(const CriticalSolution& sol, double tol) {
  const auto& metric = sol.metric();
  const int n = metric.dimension();
  const double scal = metric.scalar_curvature_constant();
  const std::size_t m = metric.size();
  const double om = unit_sphere_area(n);

  // lhs: volume integral of f |Ric_o|^2 (no 1/f anywhere, no floor needed)
  std::vector<double> integrand(m);
  for (std::size_t i = 0; i < m; ++i) {
    const MetricPoint p = metric.at(i);
    const double wn = std::pow(p.w, n - 1);
    if (wn == 0.0) {  // collapsed orbit sphere at a coordinate center
      integrand[i] = 0.0;
      continue;
    }
    const auto ric = ricci_components(metric, i);
    const double ric_o_sq = traceless_norm_sq(n, ric.radial, ric.tangential);
    // dV = omega w^{n-1} drho = omega w^{n-1} du / (du/drho)
    integrand[i] = sol.potential().f[i] * ric_o_sq * wn / p.du_drho;
  }
  const double lhs = om * simpson(integrand, metric.grid_step());

  // rhs: outward flux of Y = Ric(grad f) - (R/n) grad f
  double rhs = 0.0;
  const std::size_t last = m - 1;
  for (const auto& bc : sol.boundary()) {
    const std::size_t i = bc.outward_is_positive ? last : 0;
    const auto ric = ricci_components(metric, i);
    const auto d = frame_derivatives(metric, sol.potential(), i);
    const double y_rho = (ric.radial - scal / n) * d.f_rho;
    const double sign = bc.outward_is_positive ? 1.0 : -1.0;
    rhs += sign * om * std::pow(metric.at(i).w, n - 1) * y_rho;
  }

  const double residual =
      std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-14});
  return CheckReport::asserted("divergence_balance", "Lemma 2.1", lhs, rhs,
                               residual, tol);
}

double pointwise_divergence_residual(const CriticalSolution& sol, double f_floor) {
  const auto& metric = sol.metric();
  const int n = metric.dimension();
  const double scal = metric.scalar_curvature_constant();
  const std::size_t m = metric.size();
  std::vector<double> y_rho(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto ric = ricci_components(metric, i);
    const auto d = frame_derivatives(metric, sol.potential(), i);
    y_rho[i] = (ric.radial - scal / n) * d.f_rho;
  }
  const auto div_y = radial_divergence(sol, y_rho);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (sol.potential().f[i] < f_floor) continue;
    const auto ric = ricci_components(metric, i);
    const double ric_o_sq = traceless_norm_sq(n, ric.radial, ric.tangential);
    worst = std::max(worst,
                     std::abs(div_y[i] - sol.potential().f[i] * ric_o_sq));
  }
  return worst;
}

}  // namespace critlab
