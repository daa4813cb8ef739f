#pragma once

#include <cstddef>

#include "critlab/solution.hpp"
#include "critlab/types.hpp"

namespace critlab {

/// Geodesic ball in one of the three simply connected space forms.
struct BallSpec {
  SpaceForm kind;
  int n;
  double radius;  // geodesic radius; spherical case requires radius < pi/2
};

/// Closed-form critical metric on a geodesic ball:
///   euclidean:  f = (r0^2 - r^2) / (2(n-1))
///   spherical:  f = (cos r - cos r0) / ((n-1) cos r0)
///   hyperbolic: f = (cosh r0 - cosh r) / ((n-1) cosh r0)
/// MAX(f) is the center point; the boundary is a single round sphere.
CriticalSolution construct_ball(const BallSpec& spec, std::size_t grid_size = 2048);

}  // namespace critlab
