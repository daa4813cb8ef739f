#include "critlab/solution.hpp"

#include <algorithm>
#include <cmath>

#include "critlab/curvature.hpp"

namespace critlab {

namespace {
constexpr double kDegenerateGrad = 1e-10;
}

CriticalSolution::CriticalSolution(WarpedMetric metric, RadialProfile potential,
                                   double f_max, std::vector<double> max_locus,
                                   MaxLocusKind max_kind, double d2f_at_max,
                                   SolutionInfo info)
    : metric_(std::move(metric)),
      potential_(std::move(potential)),
      f_max_(f_max),
      max_locus_(std::move(max_locus)),
      max_kind_(max_kind),
      d2f_at_max_(d2f_at_max),
      info_(std::move(info)) {
  potential_.validate_against(metric_);
  spline_ = QuinticHermite(potential_.grid, potential_.f, potential_.df,
                           potential_.d2f);
  {
    std::vector<double> w(metric_.size()), dw(metric_.size()), d2w(metric_.size());
    for (std::size_t i = 0; i < metric_.size(); ++i) {
      const MetricPoint p = metric_.at(i);
      // stored in grid-coordinate derivatives for interpolation
      w[i] = p.w;
      dw[i] = p.w_rho / p.du_drho;
      d2w[i] = (metric_.gauge() == Gauge::arc_length)
                   ? p.w_rhorho
                   : 0.0;  // w = r exactly in areal gauge
    }
    w_spline_ = QuinticHermite(metric_.grid(), w, dw, d2w);
  }
  build_boundary();
  build_components();
}

double CriticalSolution::warping_at(double u) const {
  return (metric_.gauge() == Gauge::areal_radius) ? u : w_spline_.value(u);
}

namespace {
// linear interpolation of a nodal metric quantity (areal-gauge path only)
double interp_nodal(const WarpedMetric& metric, double u,
                    double (*pick)(const MetricPoint&)) {
  const auto& g = metric.grid();
  auto it = std::upper_bound(g.begin(), g.end(), u);
  std::size_t i = (it == g.begin()) ? 0 : static_cast<std::size_t>(it - g.begin()) - 1;
  i = std::min(i, g.size() - 2);
  const double t = (u - g[i]) / (g[i + 1] - g[i]);
  const MetricPoint p0 = metric.at(i), p1 = metric.at(i + 1);
  return (1.0 - t) * pick(p0) + t * pick(p1);
}
}  // namespace

double CriticalSolution::du_drho_at(double u) const {
  if (metric_.gauge() == Gauge::arc_length) return 1.0;
  // du/drho = sqrt(V(r)); the areal gauge is only used where V > 0
  return interp_nodal(metric_, u, [](const MetricPoint& p) { return p.du_drho; });
}

double CriticalSolution::warping_rho_at(double u) const {
  if (metric_.gauge() == Gauge::arc_length) return w_spline_.derivative(u);
  return du_drho_at(u);  // dw/drho = dr/drho = sqrt(V)
}

double CriticalSolution::warping_rhorho_at(double u) const {
  if (metric_.gauge() == Gauge::arc_length) return w_spline_.second_derivative(u);
  return interp_nodal(metric_, u, [](const MetricPoint& p) { return p.w_rhorho; });
}

double CriticalSolution::frame_second_at(double u) const {
  if (metric_.gauge() == Gauge::arc_length) return spline_.second_derivative(u);
  const double j = du_drho_at(u);  // sqrt(V)
  return j * j * spline_.second_derivative(u) + warping_rhorho_at(u) * spline_.derivative(u);
}

void CriticalSolution::build_boundary() {
  boundary_.clear();
  const auto& f = potential_.f;
  const std::size_t last = f.size() - 1;
  const int n = metric_.dimension();
  const double om = unit_sphere_area(n);
  auto add = [&](std::size_t i, bool outward_positive) {
    const auto d = frame_derivatives(metric_, potential_, i);
    const double grad = std::abs(d.f_rho);
    if (grad < kDegenerateGrad)
      throw DegenerateBoundaryError("boundary sphere carries |grad f| below 1e-10");
    const double w = metric_.at(i).w;
    boundary_.push_back({potential_.grid[i], grad, 1.0 / grad,
                         om * std::pow(w, n - 1),
                         (n - 1) * (n - 2) / (w * w), 2, outward_positive});
  };
  if (f[0] == 0.0) add(0, false);
  if (f[last] == 0.0) add(last, true);
  if (boundary_.empty())
    throw MalformedMetricError("potential does not vanish at any grid endpoint");
}

void CriticalSolution::build_components() {
  components_.clear();
  const auto& g = potential_.grid;
  std::vector<double> cuts = max_locus_;
  std::sort(cuts.begin(), cuts.end());
  double lo = g.front();
  for (double c : cuts) {
    if (c > lo + 0.0) components_.emplace_back(lo, c);
    lo = c;
  }
  if (lo < g.back()) components_.emplace_back(lo, g.back());
  // an interior maximum splits the domain; a boundary-touching max cannot
  // occur since f vanishes there
  for (const auto& [a, b] : components_) {
    const bool touches =
        std::any_of(boundary_.begin(), boundary_.end(), [&](const BoundaryComponent& bc) {
          return std::abs(bc.coordinate - a) <= 1e-12 * (1 + std::abs(a)) ||
                 std::abs(bc.coordinate - b) <= 1e-12 * (1 + std::abs(b));
        });
    if (!touches)
      throw InvariantViolationError("component of M \\ MAX(f) touches no boundary sphere");
  }
}

std::vector<std::size_t> CriticalSolution::component_boundaries(std::size_t k) const {
  const auto& [a, b] = components_.at(k);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < boundary_.size(); ++i) {
    const double c = boundary_[i].coordinate;
    if (c >= a - 1e-12 && c <= b + 1e-12) out.push_back(i);
  }
  return out;
}

std::vector<BoundaryComponent> boundary_data(const CriticalSolution& solution) {
  return solution.boundary();
}

}  // namespace critlab
