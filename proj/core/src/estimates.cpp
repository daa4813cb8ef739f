#include "critlab/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "critlab/curvature.hpp"
#include "critlab/numerics.hpp"

namespace critlab {

namespace {

double theorem_bound_sq(int n, double scal, double f_max) {
  return n * (n - 1.0) / (scal * f_max * f_max + 2.0 * n * f_max);
}

// relative slack so that exact equality cases pass the hypothesis gate
constexpr double kHypothesisSlack = 1e-9;

bool mean_curvature_hypothesis(double mean_curvature, double bound_sq) {
  return mean_curvature * mean_curvature >= bound_sq * (1.0 - kHypothesisSlack);
}

}  // namespace

double domain_volume(const CriticalSolution& sol) {
  const auto& metric = sol.metric();
  const int n = metric.dimension();
  const std::size_t m = metric.size();
  std::vector<double> integrand(m);
  for (std::size_t i = 0; i < m; ++i) {
    const MetricPoint p = metric.at(i);
    integrand[i] = std::pow(p.w, n - 1) / p.du_drho;
  }
  return unit_sphere_area(n) * simpson(integrand, metric.grid_step());
}

EstimateResult mean_curvature_bound(const CriticalSolution& sol, double tol) {
  const int n = sol.dimension();
  const double scal = sol.scalar_curvature_constant();
  const double f_max = sol.f_max();
  if (!(f_max > 0.0))
    throw InvariantViolationError("mean_curvature_bound: f_max must be positive");
  const double denom = scal * f_max * f_max + 2.0 * n * f_max;
  if (!(denom > 0.0))
    throw InvariantViolationError(
        "mean_curvature_bound: R f_max^2 + 2 n f_max must be positive");
  double attained = std::numeric_limits<double>::infinity();
  for (const auto& bc : sol.boundary())
    attained = std::min(attained, bc.mean_curvature);
  const double bound = std::sqrt(n * (n - 1.0) / denom);
  EstimateResult r;
  r.name = "mean_curvature_bound";
  r.paper_anchor = "Theorem 1.1";
  r.bound_value = bound;
  r.attained_value = attained;
  r.margin = bound - attained;
  r.tol = tol;
  r.equality = std::abs(r.margin) <= tol * std::max(1.0, bound);
  r.hypothesis_ok = true;
  r.status = (attained <= bound + tol * std::max(1.0, bound)) ? CheckStatus::pass
                                                              : CheckStatus::fail;
  return r;
}

EstimateResult area_volume_bound(const CriticalSolution& sol, double tol) {
  const int n = sol.dimension();
  EstimateResult r;
  r.name = "area_volume_bound";
  r.paper_anchor = "Corollary 1.2";
  r.tol = tol;
  r.hypothesis_ok = (sol.scalar_curvature_constant() == 0.0) &&
                    (sol.boundary().size() == 1);
  if (!r.hypothesis_ok) {
    r.status = CheckStatus::hypothesis_failed;
    return r;
  }
  const double area = sol.boundary().front().area;
  double vol;
  if (sol.info().kind == "ball") {
    // Euclidean ball: closed-form volume, keeping the equality case exact
    const double r0 = sol.metric().grid().back();
    vol = unit_sphere_area(n) * std::pow(r0, n) / n;
  } else {
    vol = domain_volume(sol);
  }
  r.attained_value = area / vol;
  r.bound_value = std::sqrt(n * n / (2.0 * (n - 1) * sol.f_max()));
  r.margin = r.bound_value - r.attained_value;
  r.equality = std::abs(r.margin) <= tol * std::max(1.0, r.bound_value);
  r.status = (r.attained_value <= r.bound_value + tol * std::max(1.0, r.bound_value))
                 ? CheckStatus::pass
                 : CheckStatus::fail;
  return r;
}

bool ball_exclusion(int n, double sphere_radius, double f_max) {
  if (!(sphere_radius > 0.0) || !(f_max > 0.0))
    throw DomainError("ball_exclusion: radius and f_max must be positive");
  return sphere_radius > std::sqrt(2.0 * (n - 1) * f_max);
}

BoundaryAreaReport boundary_area_estimate(const CriticalSolution& sol, double tol) {
  const int n = sol.dimension();
  const double scal = sol.scalar_curvature_constant();
  const bool connected = sol.boundary().size() == 1;
  BoundaryAreaReport rep;
  for (std::size_t k = 0; k < sol.boundary().size(); ++k) {
    const auto& bc = sol.boundary()[k];
    EstimateResult r;
    r.name = "boundary_area_estimate[" + std::to_string(k) + "]";
    r.paper_anchor = "Theorem 1.4";
    r.tol = tol;
    const double hsq = bc.mean_curvature * bc.mean_curvature;
    const double denom = (n - 2.0) / n * scal + (n - 2.0) / (n - 1) * hsq;
    // negative scalar curvature needs H^2 > -(n-1)R/n, i.e. denom > 0
    const bool denom_ok = denom > 0.0;
    r.hypothesis_ok = connected && denom_ok;
    r.attained_value = bc.area;
    if (denom_ok) {
      // round components carry constant intrinsic curvature, so the boundary
      // integral is intrinsic_R * area
      r.bound_value = bc.intrinsic_scalar * bc.area / denom;
      r.margin = r.bound_value - r.attained_value;
      r.equality =
          std::abs(r.margin) <= tol * std::max(1.0, std::abs(r.bound_value));
      r.status = r.hypothesis_ok
                     ? ((r.attained_value <=
                         r.bound_value + tol * std::max(1.0, r.bound_value))
                            ? CheckStatus::pass
                            : CheckStatus::fail)
                     : CheckStatus::informational;
    } else {
      r.status = CheckStatus::hypothesis_failed;
    }
    rep.per_component.push_back(r);
  }
  if (n == 3) {
    rep.gauss_bonnet_lhs = 0.0;
    rep.gauss_bonnet_rhs = 0.0;
    for (const auto& bc : sol.boundary()) {
      rep.gauss_bonnet_lhs += bc.intrinsic_scalar * bc.area;
      rep.gauss_bonnet_rhs += 4.0 * std::numbers::pi * bc.euler_char;
    }
    if (connected) {
      const auto& bc = sol.boundary().front();
      const double denom = scal / 6.0 +
                           bc.mean_curvature * bc.mean_curvature / 4.0;
      if (denom > 0.0) {
        EstimateResult c;
        c.name = "boundary_area_sphere_form";
        c.paper_anchor = "Corollary 1.7";
        c.tol = tol;
        c.bound_value = 4.0 * std::numbers::pi / denom;
        c.attained_value = bc.area;
        c.margin = c.bound_value - c.attained_value;
        c.equality = std::abs(c.margin) <= tol * std::max(1.0, c.bound_value);
        c.hypothesis_ok = true;
        c.status = (c.attained_value <= c.bound_value + tol * std::max(1.0, c.bound_value))
                       ? CheckStatus::pass
                       : CheckStatus::fail;
        rep.has_corollary_form = true;
        rep.corollary_form = c;
      }
    }
  }
  return rep;
}

EstimateResult gradient_bound_check(const CriticalSolution& sol,
                                    std::size_t component, double tol) {
  const int n = sol.dimension();
  const double scal = sol.scalar_curvature_constant();
  const double f_max = sol.f_max();
  const auto& [a, b] = sol.components().at(component);

  EstimateResult r;
  r.name = "gradient_bound[" + std::to_string(component) + "]";
  r.paper_anchor = "Lemma 2.5";
  r.tol = tol;

  const double bound_sq = theorem_bound_sq(n, scal, f_max);
  r.hypothesis_ok = true;
  for (std::size_t idx : sol.component_boundaries(component))
    r.hypothesis_ok = r.hypothesis_ok &&
        mean_curvature_hypothesis(sol.boundary()[idx].mean_curvature, bound_sq);

  // max violation of |grad f|^2 - h(f) over the component's grid points
  const auto& metric = sol.metric();
  const auto& prof = sol.potential();
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < metric.size(); ++i) {
    const double u = prof.grid[i];
    if (u < a || u > b) continue;
    const auto d = frame_derivatives(metric, prof, i);
    const double grad_sq = d.f_rho * d.f_rho;
    const double fv = prof.f[i];
    const double hval = (scal * (f_max * f_max - fv * fv) +
                         2.0 * n * (f_max - fv)) / (n * (n - 1.0));
    worst = std::max(worst, grad_sq - hval);
  }
  r.attained_value = worst;  // max of |grad f|^2 - h(f); <= 0 when the bound holds
  r.bound_value = 0.0;
  r.margin = -worst;
  r.equality = std::abs(worst) <= tol;
  r.status = r.hypothesis_ok
                 ? (worst <= tol ? CheckStatus::pass : CheckStatus::fail)
                 : CheckStatus::hypothesis_failed;
  return r;
}

EstimateResult potential_ceiling_check(const CriticalSolution& sol) {
  const double scal = sol.scalar_curvature_constant();
  EstimateResult r;
  r.name = "potential_ceiling";
  r.paper_anchor = "Eq. (2.13)";
  r.tol = 0.0;
  if (!(scal < 0.0)) {
    r.hypothesis_ok = false;
    r.status = CheckStatus::hypothesis_failed;
    return r;
  }
  const int n = sol.dimension();
  r.bound_value = -n / scal;
  r.attained_value = sol.f_max();
  r.margin = r.bound_value - r.attained_value;
  r.equality = false;
  r.hypothesis_ok = true;
  r.status = (r.attained_value < r.bound_value) ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

}  // namespace critlab
