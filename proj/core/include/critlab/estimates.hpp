#pragma once

#include <string>
#include <vector>

#include "critlab/solution.hpp"

namespace critlab {

/// Result of a sharp-estimate check: the bound, the attained value, their
/// margin (bound - attained), whether the hypothesis of the statement holds,
/// and whether equality is attained within tol.
struct EstimateResult {
  std::string name;
  std::string paper_anchor;
  double bound_value = 0.0;
  double attained_value = 0.0;
  double margin = 0.0;
  bool equality = false;
  bool hypothesis_ok = true;
  CheckStatus status = CheckStatus::informational;
  double tol = 0.0;
};

/// min_i H_i <= sqrt( n(n-1) / (R f_max^2 + 2 n f_max) ), equality exactly
/// for geodesic balls in space forms.
EstimateResult mean_curvature_bound(const CriticalSolution& solution,
                                    double tol = 1e-9);

/// Scalar-flat, connected boundary:
/// area / Vol <= sqrt( n^2 / (2(n-1) f_max) ). Hypothesis failures are
/// reported, not asserted.
EstimateResult area_volume_bound(const CriticalSolution& solution,
                                 double tol = 1e-9);

/// Exclusion predicate for a boundary round sphere of radius r: true when
/// r > sqrt(2(n-1) f_max), i.e. the solution cannot be a Euclidean ball.
bool ball_exclusion(int n, double sphere_radius, double f_max);

/// Boundary-area estimate
///   area <= ( integral of R_boundary ) / ( (n-2)R/n + (n-2)H^2/(n-1) ),
/// asserted only for connected boundaries; for n = 3 the report includes the
/// Gauss-Bonnet form of the boundary integral and the 4 pi / (R/6 + H^2/4)
/// variant.
struct BoundaryAreaReport {
  std::vector<EstimateResult> per_component;
  // n = 3 extras (present when dimension == 3)
  double gauss_bonnet_lhs = 0.0;   // integral of boundary scalar curvature
  double gauss_bonnet_rhs = 0.0;   // 4 pi * euler characteristic
  bool has_corollary_form = false; // connected boundary, n = 3
  EstimateResult corollary_form;
};
BoundaryAreaReport boundary_area_estimate(const CriticalSolution& solution,
                                          double tol = 1e-8);

/// Pointwise gradient bound on one component E of M \ MAX(f):
///   |grad f|^2 <= ( R(f_max^2 - f^2) + 2n(f_max - f) ) / (n(n-1)),
/// conditional on H^2 >= n(n-1)/(R f_max^2 + 2n f_max) along the boundary
/// spheres of E. Reports the max violation either way.
EstimateResult gradient_bound_check(const CriticalSolution& solution,
                                    std::size_t component, double tol = 1e-9);

/// Quadrature volume of the solution domain.
double domain_volume(const CriticalSolution& solution);

/// f_max < -n/R for negative scalar curvature (strictness margin returned).
EstimateResult potential_ceiling_check(const CriticalSolution& solution);

}  // namespace critlab
