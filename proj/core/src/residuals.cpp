#include "critlab/residuals.hpp"

#include <cmath>

#include "critlab/curvature.hpp"

namespace critlab {

namespace {
// near a collapsed orbit sphere the tangential curvature formula is a 0/0
// limit whose rounding error in the residual grows like eps * f / w^2;
// residual maxima stay on the region where that noise sits below the
// closed-form tolerance
double conditioning_floor(const WarpedMetric& metric, double f_scale) {
  double w_max = 0.0;
  for (std::size_t i = 0; i < metric.size(); ++i)
    w_max = std::max(w_max, metric.at(i).w);
  const double noise_scale = (metric.dimension() - 2) * f_scale;
  return std::min(0.25, 0.02 * std::sqrt(std::max(1.0, noise_scale))) * w_max;
}
}  // namespace

SystemResidual miao_tam_residual(const CriticalSolution& solution) {
  const auto& metric = solution.metric();
  const auto& profile = solution.potential();
  const int n = metric.dimension();
  const double scal = metric.scalar_curvature_constant();
  const double w_floor = conditioning_floor(metric, solution.f_max());
  SystemResidual out{0.0, 0.0, 0.0};
  for (std::size_t i = 1; i + 1 < metric.size(); ++i) {
    if (metric.at(i).w < w_floor) continue;
    const auto ric = ricci_components(metric, i);
    const auto hess = hessian_laplacian(metric, profile, i);
    const double fval = profile.f[i];
    const double rad = -hess.laplacian + hess.radial - fval * ric.radial - 1.0;
    const double tan = -hess.laplacian + hess.tangential - fval * ric.tangential - 1.0;
    const double tra = hess.laplacian + scal * fval / (n - 1) + n / (n - 1.0);
    out.radial = std::max(out.radial, std::abs(rad));
    out.tangential = std::max(out.tangential, std::abs(tan));
    out.trace = std::max(out.trace, std::abs(tra));
  }
  return out;
}

double traceless_identity_residual(const CriticalSolution& solution) {
  const auto& metric = solution.metric();
  const auto& profile = solution.potential();
  const int n = metric.dimension();
  const double w_floor = conditioning_floor(metric, solution.f_max());
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < metric.size(); ++i) {
    if (metric.at(i).w < w_floor) continue;
    const auto ric = ricci_components(metric, i);
    const auto hess = hessian_laplacian(metric, profile, i);
    const double scal = ric.radial + (n - 1) * ric.tangential;
    const double lhs_rad = profile.f[i] * (ric.radial - scal / n);
    const double lhs_tan = profile.f[i] * (ric.tangential - scal / n);
    const double rhs_rad = hess.radial - hess.laplacian / n;
    const double rhs_tan = hess.tangential - hess.laplacian / n;
    worst = std::max(worst, std::abs(lhs_rad - rhs_rad));
    worst = std::max(worst, std::abs(lhs_tan - rhs_tan));
  }
  return worst;
}

}  // namespace critlab
