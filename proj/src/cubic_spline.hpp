#pragma once

#include <vector>

namespace dualruled::detail {

/// Clamped cubic spline on a uniform grid. End slopes come from one-sided
/// fourth-order differences so the interpolant does not flatten at the ends.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(double x0, double h, std::vector<double> y);

  /// Value and derivatives of order 1..3 at x (extrapolates the end cubics).
  void eval(double x, double out[4]) const;

 private:
  double x0_ = 0.0;
  double h_ = 1.0;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace dualruled::detail
