#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace critlab {

/// The three simply connected space forms, identified by the sign of their
/// sectional curvature k in {0, +1, -1}.
enum class SpaceForm { euclidean, spherical, hyperbolic };

inline int sectional_sign(SpaceForm kind) {
  switch (kind) {
    case SpaceForm::euclidean: return 0;
    case SpaceForm::spherical: return 1;
    case SpaceForm::hyperbolic: return -1;
  }
  return 0;
}

inline std::string to_string(SpaceForm kind) {
  switch (kind) {
    case SpaceForm::euclidean: return "euclidean";
    case SpaceForm::spherical: return "spherical";
    case SpaceForm::hyperbolic: return "hyperbolic";
  }
  return "?";
}

/// Radial gauge of a rotationally symmetric metric.
///   arc_length:   g = d rho^2 + w(rho)^2 g_round
///   areal_radius: g = V(r)^-1 dr^2 + r^2 g_round
enum class Gauge { arc_length, areal_radius };

// ---------------------------------------------------------------------------
// Error taxonomy. Construction and checks throw; estimates report instead.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedMetricError : Error { using Error::Error; };
struct InconsistentMetricError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct DegenerateBoundaryError : Error { using Error::Error; };
struct UnsupportedDomainError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NoPositiveSolutionError : Error { using Error::Error; };
struct NotCriticalError : Error { using Error::Error; };
struct LevelSetError : Error { using Error::Error; };
struct InvariantViolationError : Error { using Error::Error; };
struct InconclusiveError : Error { using Error::Error; };

// ---------------------------------------------------------------------------

/// Measure of the unit sphere S^{n-1}: omega_{n-1} = 2 pi^{n/2} / Gamma(n/2).
inline double unit_sphere_area(int n) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

/// Outcome of one verification record, distinguishing vacuous hypotheses and
/// degenerate inputs from genuine pass/fail.
enum class CheckStatus { pass, fail, hypothesis_failed, informational, inconclusive };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::hypothesis_failed: return "hypothesis_failed";
    case CheckStatus::informational: return "informational";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace critlab
