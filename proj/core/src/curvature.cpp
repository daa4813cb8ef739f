#include "critlab/curvature.hpp"

#include <cmath>

namespace critlab {

RicciComponents ricci_components(const WarpedMetric& metric, std::size_t i) {
  const MetricPoint p = metric.at(i);
  if (!std::isfinite(p.w) || !std::isfinite(p.w_rho) || !std::isfinite(p.w_rhorho))
    throw MalformedMetricError("ricci_components: non-finite metric data");
  const int n = metric.dimension();
  const double rad = -(n - 1) * p.w_rhorho / p.w;
  const double tan =
      -p.w_rhorho / p.w + (n - 2) * (1.0 - p.w_rho * p.w_rho) / (p.w * p.w);
  return {rad, tan};
}

double scalar_curvature(const WarpedMetric& metric, std::size_t i) {
  const auto ric = ricci_components(metric, i);
  return ric.radial + (metric.dimension() - 1) * ric.tangential;
}

FrameDerivatives frame_derivatives(const WarpedMetric& metric,
                                   const RadialProfile& profile, std::size_t i) {
  const MetricPoint p = metric.at(i);
  if (metric.gauge() == Gauge::arc_length)
    return {profile.df[i], profile.d2f[i]};
  // areal gauge: d/drho = sqrt(V) d/dr, and (sqrt V)' contributes V'/2
  const double v = p.du_drho * p.du_drho;  // = V
  return {p.du_drho * profile.df[i],
          v * profile.d2f[i] + p.w_rhorho * profile.df[i]};
}

HessianData hessian_laplacian(const WarpedMetric& metric,
                              const RadialProfile& profile, std::size_t i) {
  if (profile.grid.size() != metric.size())
    throw DimensionMismatchError("hessian_laplacian: profile grid differs from metric grid");
  const MetricPoint p = metric.at(i);
  const auto d = frame_derivatives(metric, profile, i);
  const int n = metric.dimension();
  const double hess_rad = d.f_rhorho;
  // at a coordinate center the Hessian of a smooth radial function is
  // isotropic: lim (w'/w) f' = f''
  const double hess_tan = (p.w == 0.0) ? d.f_rhorho : (p.w_rho / p.w) * d.f_rho;
  return {hess_rad, hess_tan, hess_rad + (n - 1) * hess_tan};
}

}  // namespace critlab
