#pragma once

#include <cstddef>

#include "critlab/warped_metric.hpp"

namespace critlab {

/// Ricci curvature in the orthonormal frame {radial, tangential}; all
/// tangential directions agree by symmetry.
struct RicciComponents {
  double radial;
  double tangential;
};

/// Orthonormal-frame Hessian of a radial function and its Laplacian.
struct HessianData {
  double radial;
  double tangential;
  double laplacian;
};

RicciComponents ricci_components(const WarpedMetric& metric, std::size_t i);

/// R = Ric_rr + (n-1) Ric_tt at grid point i.
double scalar_curvature(const WarpedMetric& metric, std::size_t i);

HessianData hessian_laplacian(const WarpedMetric& metric,
                              const RadialProfile& profile, std::size_t i);

/// Arc-length derivatives of the potential at grid point i:
/// (df/drho, d^2 f/drho^2), converted from grid-coordinate derivatives.
struct FrameDerivatives {
  double f_rho;
  double f_rhorho;
};
FrameDerivatives frame_derivatives(const WarpedMetric& metric,
                                   const RadialProfile& profile, std::size_t i);

/// |T_o|^2 for a radially symmetric symmetric 2-tensor with orthonormal
/// components (t_rad, t_tan): squared norm of the traceless part.
inline double traceless_norm_sq(int n, double t_rad, double t_tan) {
  const double d = t_rad - t_tan;
  return (n - 1.0) / n * d * d;
}

}  // namespace critlab
