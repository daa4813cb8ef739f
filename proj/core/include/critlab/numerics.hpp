#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace critlab {

/// Composite Simpson rule on a uniform grid (3/8 correction when the
/// interval count is odd). Order 4.
double simpson(std::span<const double> y, double h);

/// Second-order first derivative of grid samples (central in the interior,
/// one-sided at the two ends).
std::vector<double> central_derivative(std::span<const double> y, double h);

/// Bracketed scalar root finding (bisection with secant acceleration).
/// Requires fa = f(a) and fb = f(b) of opposite sign.
double find_root(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-14);

/// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

/// C^2 piecewise-quintic Hermite interpolant built from samples of a function
/// and its first two derivatives on a strictly increasing grid.
class QuinticHermite {
 public:
  QuinticHermite() = default;
  QuinticHermite(std::vector<double> x, std::vector<double> f,
                 std::vector<double> df, std::vector<double> d2f);

  double value(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::size_t locate(double x) const;
  std::vector<double> x_, f_, df_, d2f_;
};

}  // namespace critlab
