#include "critlab/warped_metric.hpp"

#include <cmath>

#include "critlab/curvature.hpp"

namespace critlab {

WarpedMetric WarpedMetric::arc_length(int n, double scalar_curvature,
                                      std::vector<double> grid,
                                      std::vector<double> w,
                                      std::vector<double> dw,
                                      std::vector<double> d2w) {
  WarpedMetric m;
  m.n_ = n;
  m.gauge_ = Gauge::arc_length;
  m.scalar_curvature_ = scalar_curvature;
  m.grid_ = std::move(grid);
  m.w_ = std::move(w);
  m.dw_ = std::move(dw);
  m.d2w_ = std::move(d2w);
  if (m.w_.size() != m.grid_.size() || m.dw_.size() != m.grid_.size() ||
      m.d2w_.size() != m.grid_.size())
    throw MalformedMetricError("arc-length metric: array sizes differ from grid");
  m.validate();
  return m;
}

WarpedMetric WarpedMetric::areal_radius(int n, double scalar_curvature,
                                        std::vector<double> grid,
                                        std::vector<double> lapse,
                                        std::vector<double> dlapse) {
  WarpedMetric m;
  m.n_ = n;
  m.gauge_ = Gauge::areal_radius;
  m.scalar_curvature_ = scalar_curvature;
  m.grid_ = std::move(grid);
  m.lapse_ = std::move(lapse);
  m.dlapse_ = std::move(dlapse);
  if (m.lapse_.size() != m.grid_.size() || m.dlapse_.size() != m.grid_.size())
    throw MalformedMetricError("areal metric: array sizes differ from grid");
  for (double v : m.lapse_)
    if (!(v > 0.0))
      throw MalformedMetricError("areal metric: lapse must be positive on the grid");
  m.validate();
  return m;
}

void WarpedMetric::validate() const {
  if (n_ < 3) throw MalformedMetricError("metric dimension must be >= 3");
  if (grid_.size() < 64) throw MalformedMetricError("grid must have at least 64 points");
  for (std::size_t i = 1; i < grid_.size(); ++i)
    if (!(grid_[i] > grid_[i - 1]))
      throw MalformedMetricError("grid must be strictly increasing");
  const std::size_t last = grid_.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    const MetricPoint p = at(i);
    if (!std::isfinite(p.w) || !std::isfinite(p.w_rho) || !std::isfinite(p.w_rhorho))
      throw MalformedMetricError("non-finite metric data");
    const bool interior = i > 0 && i < last;
    if (interior && !(p.w > 0.0))
      throw MalformedMetricError("warping function must be positive on the interior");
  }
  const double dev = scalar_constancy_deviation();
  if (dev > 1e-8)
    throw InconsistentMetricError(
        "pointwise scalar curvature deviates from the stored constant by " +
        std::to_string(dev));
}

MetricPoint WarpedMetric::at(std::size_t i) const {
  if (gauge_ == Gauge::arc_length)
    return {w_[i], dw_[i], d2w_[i], 1.0};
  const double r = grid_[i];
  const double v = lapse_[i];
  const double sv = std::sqrt(v);
  return {r, sv, 0.5 * dlapse_[i], sv};
}

double WarpedMetric::scalar_constancy_deviation() const {
  double dev = 0.0;
  const double scale = std::abs(scalar_curvature_) + 1.0;
  double w_max = 0.0;
  for (std::size_t i = 0; i < grid_.size(); ++i) w_max = std::max(w_max, at(i).w);
  // the curvature formulas lose precision as the orbit spheres collapse at a
  // coordinate center; the constancy check stays away from that region
  const double w_floor = 1e-3 * w_max;
  for (std::size_t i = 1; i + 1 < grid_.size(); ++i) {
    if (at(i).w < w_floor) continue;
    const double r = scalar_curvature(*this, i);
    dev = std::max(dev, std::abs(r - scalar_curvature_) / scale);
  }
  return dev;
}

void RadialProfile::validate_against(const WarpedMetric& metric) const {
  if (grid.size() != metric.size())
    throw DimensionMismatchError("profile grid size differs from metric grid");
  if (f.size() != grid.size() || df.size() != grid.size() || d2f.size() != grid.size())
    throw DimensionMismatchError("profile arrays sizes differ from grid");
  bool nonzero = false;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(f[i]) || !std::isfinite(df[i]) || !std::isfinite(d2f[i]))
      throw MalformedMetricError("non-finite profile data");
    if (f[i] < 0.0)
      throw MalformedMetricError("potential must be nonnegative on the domain");
    if (f[i] != 0.0) nonzero = true;
  }
  if (!nonzero) throw MalformedMetricError("potential must not vanish identically");
}

}  // namespace critlab
