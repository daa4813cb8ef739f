#include "critlab/numerics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace critlab {

double simpson(std::span<const double> y, double h) {
  const std::size_t m = y.size();
  if (m < 2) return 0.0;
  if (m == 2) return 0.5 * h * (y[0] + y[1]);
  std::size_t intervals = m - 1;
  double acc = 0.0;
  // peel three intervals with the 3/8 rule if the count is odd
  if (intervals % 2 == 1) {
    if (intervals < 3) return 0.5 * h * (y[0] + y[1]);
    const std::size_t k = m - 4;
    acc += 3.0 * h / 8.0 * (y[k] + 3.0 * y[k + 1] + 3.0 * y[k + 2] + y[k + 3]);
    intervals -= 3;
  }
  double s = y[0] + y[intervals];
  for (std::size_t i = 1; i < intervals; i += 2) s += 4.0 * y[i];
  for (std::size_t i = 2; i < intervals; i += 2) s += 2.0 * y[i];
  return acc + s * h / 3.0;
}

std::vector<double> central_derivative(std::span<const double> y, double h) {
  const std::size_t m = y.size();
  std::vector<double> d(m);
  if (m < 3) {
    if (m == 2) d[0] = d[1] = (y[1] - y[0]) / h;
    return d;
  }
  for (std::size_t i = 1; i + 1 < m; ++i) d[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
  d[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
  d[m - 1] = (3.0 * y[m - 1] - 4.0 * y[m - 2] + y[m - 3]) / (2.0 * h);
  return d;
}

double find_root(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0))
    throw std::invalid_argument("find_root: endpoints do not bracket a root");
  for (int it = 0; it < 200 && std::abs(b - a) > tol * (1.0 + std::abs(a)); ++it) {
    // secant proposal, guarded to stay well inside the bracket
    double m = 0.5 * (a + b);
    double s = (fb != fa) ? (a - fa * (b - a) / (fb - fa)) : m;
    double lo = std::min(a, b), hi = std::max(a, b);
    double span = hi - lo;
    if (!(s > lo + 0.01 * span && s < hi - 0.01 * span)) s = m;
    double fs = f(s);
    if (fs == 0.0) return s;
    if ((fs > 0) == (fa > 0)) { a = s; fa = fs; } else { b = s; fb = fs; }
  }
  return 0.5 * (a + b);
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size() && x.size() >= 2);
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i]; sy += y[i]; sxx += x[i] * x[i]; sxy += x[i] * y[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

QuinticHermite::QuinticHermite(std::vector<double> x, std::vector<double> f,
                               std::vector<double> df, std::vector<double> d2f)
    : x_(std::move(x)), f_(std::move(f)), df_(std::move(df)), d2f_(std::move(d2f)) {
  if (x_.size() < 2 || f_.size() != x_.size() || df_.size() != x_.size() ||
      d2f_.size() != x_.size())
    throw std::invalid_argument("QuinticHermite: inconsistent sample arrays");
}

std::size_t QuinticHermite::locate(double x) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(i, x_.size() - 2);
}

namespace {
// quintic Hermite basis on [0,1]: value/derivatives matched at both ends
struct QuinticEval {
  double p, dp, d2p;
};
QuinticEval eval_quintic(double f0, double d0, double s0, double f1, double d1,
                         double s1, double h, double u) {
  // coefficients of p(u) = sum c_k u^k with p matching (f,d*h,s*h^2) data
  const double c0 = f0;
  const double c1 = d0 * h;
  const double c2 = 0.5 * s0 * h * h;
  const double r0 = f1 - (c0 + c1 + c2);
  const double r1 = d1 * h - (c1 + 2.0 * c2);
  const double r2 = s1 * h * h - 2.0 * c2;
  const double c3 = 10.0 * r0 - 4.0 * r1 + 0.5 * r2;
  const double c4 = -15.0 * r0 + 7.0 * r1 - r2;
  const double c5 = 6.0 * r0 - 3.0 * r1 + 0.5 * r2;
  const double p = c0 + u * (c1 + u * (c2 + u * (c3 + u * (c4 + u * c5))));
  const double dp = c1 + u * (2 * c2 + u * (3 * c3 + u * (4 * c4 + u * 5 * c5)));
  const double d2p = 2 * c2 + u * (6 * c3 + u * (12 * c4 + u * 20 * c5));
  return {p, dp / h, d2p / (h * h)};
}
}  // namespace

double QuinticHermite::value(double x) const {
  const std::size_t i = locate(x);
  const double h = x_[i + 1] - x_[i];
  return eval_quintic(f_[i], df_[i], d2f_[i], f_[i + 1], df_[i + 1], d2f_[i + 1],
                      h, (x - x_[i]) / h).p;
}

double QuinticHermite::derivative(double x) const {
  const std::size_t i = locate(x);
  const double h = x_[i + 1] - x_[i];
  return eval_quintic(f_[i], df_[i], d2f_[i], f_[i + 1], df_[i + 1], d2f_[i + 1],
                      h, (x - x_[i]) / h).dp;
}

double QuinticHermite::second_derivative(double x) const {
  const std::size_t i = locate(x);
  const double h = x_[i + 1] - x_[i];
  return eval_quintic(f_[i], df_[i], d2f_[i], f_[i + 1], df_[i + 1], d2f_[i + 1],
                      h, (x - x_[i]) / h).d2p;
}

}  // namespace critlab
