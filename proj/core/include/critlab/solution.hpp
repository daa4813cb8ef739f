#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critlab/numerics.hpp"
#include "critlab/warped_metric.hpp"

namespace critlab {

/// Per-component boundary geometry. Boundary spheres are round and totally
/// umbilical with H = 1/|grad f| constant on each component.
struct BoundaryComponent {
  double coordinate;      // grid coordinate of the boundary sphere
  double grad_norm;       // |grad f| there (> 0 for a regular boundary)
  double mean_curvature;  // H = 1 / grad_norm
  double area;            // omega_{n-1} w^{n-1}
  double intrinsic_scalar;// (n-1)(n-2) / w^2
  int euler_char;         // 2 for round spheres; meaningful for n = 3
  bool outward_is_positive; // outward normal = +d/drho (true at the far end)
};

/// Structural type of MAX(f): an isolated center point (geodesic balls) or a
/// full orbit sphere of positive (n-1)-measure.
enum class MaxLocusKind { point, sphere };

inline std::string to_string(MaxLocusKind k) {
  return k == MaxLocusKind::point ? "point" : "sphere";
}

/// Construction metadata echoed into reports.
struct SolutionInfo {
  std::string kind;  // "ball" or "schwarzschild"
  int n = 0;
  double scalar_curvature = 0.0;
  // ordered parameter list, serialized verbatim
  std::vector<std::pair<std::string, double>> parameters;
};

/// A metric-potential pair satisfying the critical-metric system, with the
/// derived boundary and component structure.
class CriticalSolution {
 public:
  CriticalSolution(WarpedMetric metric, RadialProfile potential,
                   double f_max, std::vector<double> max_locus,
                   MaxLocusKind max_kind, double d2f_at_max,
                   SolutionInfo info);

  const WarpedMetric& metric() const { return metric_; }
  const RadialProfile& potential() const { return potential_; }
  int dimension() const { return metric_.dimension(); }
  double scalar_curvature_constant() const { return metric_.scalar_curvature_constant(); }

  double f_max() const { return f_max_; }
  const std::vector<double>& max_locus() const { return max_locus_; }
  MaxLocusKind max_kind() const { return max_kind_; }
  double d2f_at_max() const { return d2f_at_max_; }

  const std::vector<BoundaryComponent>& boundary() const { return boundary_; }

  /// Connected components of M \ MAX(f) as grid-coordinate intervals,
  /// ordered by left endpoint. Each touches at least one boundary sphere.
  const std::vector<std::pair<double, double>>& components() const { return components_; }

  /// Boundary components whose coordinate lies in the closure of component k.
  std::vector<std::size_t> component_boundaries(std::size_t k) const;

  const SolutionInfo& info() const { return info_; }

  /// Smooth evaluation between grid nodes (quintic Hermite through the
  /// stored values and derivatives). Derivatives are in the grid coordinate.
  double f_at(double u) const { return spline_.value(u); }
  double df_at(double u) const { return spline_.derivative(u); }
  double d2f_at(double u) const { return spline_.second_derivative(u); }
  double warping_at(double u) const;
  double du_drho_at(double u) const;
  /// dw/drho and d^2 w/drho^2 between nodes.
  double warping_rho_at(double u) const;
  double warping_rhorho_at(double u) const;
  /// Arc-length second derivative of the potential between nodes.
  double frame_second_at(double u) const;

 private:
  void build_boundary();
  void build_components();

  WarpedMetric metric_;
  RadialProfile potential_;
  double f_max_;
  std::vector<double> max_locus_;
  MaxLocusKind max_kind_;
  double d2f_at_max_;
  SolutionInfo info_;
  std::vector<BoundaryComponent> boundary_;
  std::vector<std::pair<double, double>> components_;
  QuinticHermite spline_;   // potential
  QuinticHermite w_spline_; // warping
};

/// Recomputes the boundary records of a solution (exposed for direct use and
/// testing; construction already populates CriticalSolution::boundary()).
std::vector<BoundaryComponent> boundary_data(const CriticalSolution& solution);

}  // namespace critlab
