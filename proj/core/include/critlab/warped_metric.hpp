#pragma once

#include <cstddef>
#include <vector>

#include "critlab/types.hpp"

namespace critlab {

/// Pointwise metric data in the orthonormal radial frame, gauge-independent:
/// warping value w, its first two arc-length derivatives, and the Jacobian
/// d(grid coordinate)/d(arc length) used to convert grid derivatives.
struct MetricPoint {
  double w;        // areal radius of the orbit sphere
  double w_rho;    // dw / d rho
  double w_rhorho; // d^2 w / d rho^2
  double du_drho;  // d(grid coordinate)/d(rho); 1 in arc-length gauge
};

/// Rotationally symmetric metric with constant scalar curvature, sampled on a
/// strictly increasing radial grid in one of two gauges:
///   arc_length:   g = d rho^2 + w(rho)^2 g_round,   stores w, w', w''
///   areal_radius: g = V(r)^-1 dr^2 + r^2 g_round,   stores V, V'
class WarpedMetric {
 public:
  static WarpedMetric arc_length(int n, double scalar_curvature,
                                 std::vector<double> grid, std::vector<double> w,
                                 std::vector<double> dw, std::vector<double> d2w);

  static WarpedMetric areal_radius(int n, double scalar_curvature,
                                   std::vector<double> grid,
                                   std::vector<double> lapse,
                                   std::vector<double> dlapse);

  int dimension() const { return n_; }
  Gauge gauge() const { return gauge_; }
  double scalar_curvature_constant() const { return scalar_curvature_; }
  std::size_t size() const { return grid_.size(); }
  const std::vector<double>& grid() const { return grid_; }
  double grid_step() const { return grid_[1] - grid_[0]; }

  MetricPoint at(std::size_t i) const;

  /// Areal radius of the orbit sphere over grid point i.
  double warping(std::size_t i) const { return at(i).w; }

  /// Max relative deviation of the pointwise scalar curvature from the stored
  /// constant. Construction enforces this at 1e-8.
  double scalar_constancy_deviation() const;

 private:
  WarpedMetric() = default;
  void validate() const;

  int n_ = 0;
  Gauge gauge_ = Gauge::arc_length;
  double scalar_curvature_ = 0.0;
  std::vector<double> grid_;
  std::vector<double> w_, dw_, d2w_;      // arc-length gauge
  std::vector<double> lapse_, dlapse_;    // areal-radius gauge
};

/// Potential values and first two grid-coordinate derivatives on the metric's
/// grid. Nonnegative, vanishing exactly at declared boundary coordinates.
struct RadialProfile {
  std::vector<double> grid;
  std::vector<double> f;
  std::vector<double> df;
  std::vector<double> d2f;

  void validate_against(const WarpedMetric& metric) const;
};

}  // namespace critlab
