#pragma once

#include <cstddef>

#include "critlab/solution.hpp"
#include "critlab/types.hpp"

namespace critlab {

/// Annular domain on a spatial Schwarzschild (or AdS-Schwarzschild) manifold,
/// bounded by two rotationally symmetric spheres of areal radii r1 < r2 and
/// containing the minimal (horizon) sphere between them. The lapse is
///   V(r) = 1 - 2 m r^{2-n}          (scalar curvature R = 0)
///   V(r) = 1 + r^2 - 2 m r^{2-n}    (ads = true, R = -n(n-1))
struct SchwarzschildSpec {
  int n;
  double mass;
  double r1;  // requested inner areal radius (validated, see below)
  double r2;  // outer areal radius; anchors the construction exactly
  bool ads = false;
};

struct SchwarzschildOptions {
  std::size_t grid_size = 2048;
  /// Tolerance gate on the tangential component of the fundamental system.
  double consistency_tol = 1e-6;
  /// Acceptance window for the realized inner radius relative to spec.r1.
  /// The overdetermined system pairs each outer radius with exactly one
  /// inner radius (for fixed mass), so r1 cannot be prescribed
  /// independently; it is realized by the solve and validated against the
  /// request within this relative window.
  double inner_radius_window = 0.25;
  /// Initial slope of the homogeneous member of the superposition; the
  /// superposed profile is seed-independent.
  double homogeneous_seed = 1.0;
};

/// Positive root of the lapse (the horizon radius).
double schwarzschild_horizon(int n, double mass, bool ads);

/// Constructs the annular critical metric in arc-length gauge by integrating
/// the coupled warping/potential system from the outer sphere through the
/// neck: one particular and one homogeneous initial-value solve, superposed
/// so the tangential component of the fundamental system holds at the outer
/// boundary (it is then conserved along the flow). The far zero of the
/// potential realizes the inner boundary. MAX(f) is an interior orbit sphere
/// of positive (n-1)-measure.
CriticalSolution construct_schwarzschild(const SchwarzschildSpec& spec,
                                         std::size_t grid_size = 2048);
CriticalSolution construct_schwarzschild(const SchwarzschildSpec& spec,
                                         const SchwarzschildOptions& options);

}  // namespace critlab
