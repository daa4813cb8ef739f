#pragma once

#include "critlab/solution.hpp"

namespace critlab {

/// Max-over-grid absolute residuals of the fundamental system
///   -(lap f) g + Hess f - f Ric = g
/// split into its radial and tangential orthonormal components, and of the
/// trace identity  lap f + R f/(n-1) + n/(n-1) = 0.
struct SystemResidual {
  double radial;
  double tangential;
  double trace;
};

SystemResidual miao_tam_residual(const CriticalSolution& solution);

/// Max componentwise residual of the traceless identity f Ric_o = Hess_o f.
double traceless_identity_residual(const CriticalSolution& solution);

}  // namespace critlab
