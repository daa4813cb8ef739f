#pragma once

#include <cstddef>
#include <vector>

#include "critlab/identities.hpp"
#include "critlab/solution.hpp"

namespace critlab {

/// Values of the level-set functional
///   F(t) = h(t)^{-n/2} * (|grad f|-weighted area of {f = t} within E),
///   h(t) = ( R(f_max^2 - t^2) + 2n(f_max - t) ) / (n(n-1))
/// along a grid of regular values t in [0, f_max).
struct FTrace {
  std::size_t component = 0;
  std::vector<double> t_grid;
  std::vector<double> F_values;
  std::vector<double> h_values;
};

/// Fitted slope of log |grad f|^2 against log (f_max - f) over a window just
/// below the maximum; theta ~ 1 for a nondegenerate maximum.
struct LojasiewiczFit {
  double theta_hat = 0.0;
  double c_hat = 0.0;       // fitted prefactor
  double window_lo = 0.0;   // t-window (values of f)
  double window_hi = 0.0;
  std::size_t samples = 0;
  bool conclusive = false;
};

/// Blow-up dichotomy of F(t) as t -> f_max along the geometric tail
/// t_k = f_max (1 - 2^-k), k = 4..14: bounded for a point maximum,
/// divergent for a maximum sphere of positive (n-1)-measure.
struct BlowupReport {
  MaxLocusKind kind = MaxLocusKind::point;
  double ratio = 0.0;           // F(t_14) / F(t_4)
  bool tail_increasing = false;
  /// fitted exponent of the divergence lower bound
  /// h(t)^{-n/2} (f_max - t) area({f = t}) ~ (f_max - t)^{-(n-2)/2}
  double bound_exponent = 0.0;
  /// fitted exponent of F itself (at least as divergent as the bound)
  double f_exponent = 0.0;
  CheckStatus status = CheckStatus::informational;
};

/// |grad f|-weighted area of the level sphere {f = t} inside component E.
/// Throws LevelSetError for t outside [0, f_max) or non-regular levels.
double level_set_flux(const CriticalSolution& solution, std::size_t component,
                      double t);

/// F along a t-grid; default grid is 64 uniform values in [0, 0.98 f_max]
/// screened for regularity.
FTrace f_functional(const CriticalSolution& solution, std::size_t component,
                    std::vector<double> t_grid = {});

/// Monotone-nonincreasing assertion for F under the boundary mean-curvature
/// hypothesis; without the hypothesis the violation count is informational.
CheckReport monotonicity_check(const FTrace& trace, bool hypothesis_ok,
                               double tol = 1e-9);

BlowupReport blowup_check(const CriticalSolution& solution, std::size_t component);

LojasiewiczFit lojasiewicz_fit(const CriticalSolution& solution,
                               std::size_t component);

/// Coarea / divergence-theorem cross-check:
///   flux(t) = - integral of (lap f) over {f > t} within E.
/// Returns the relative difference of the two sides.
double coarea_cross_check(const CriticalSolution& solution, std::size_t component,
                          double t);

}  // namespace critlab
