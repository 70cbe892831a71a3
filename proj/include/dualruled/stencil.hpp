#pragma once

// Fourth-order five-point finite differences, pointwise and on uniform grids.
// Value types need V + V and double * V.

#include <cstddef>
#include <vector>

#include "dualruled/error.hpp"
#include "dualruled/range.hpp"

namespace dualruled {

/// f'(x) with step h. Central where x ± 2h fits in `domain`, otherwise the
/// one-sided 5-point formula pointing into the domain.
template <class F>
auto stencil_first(F&& f, double x, double h, Interval domain) -> decltype(f(x)) {
  const double w = 1.0 / (12.0 * h);
  if (x - 2.0 * h >= domain.lo && x + 2.0 * h <= domain.hi) {
    return w * (f(x - 2.0 * h) + -8.0 * f(x - h) + 8.0 * f(x + h) + -1.0 * f(x + 2.0 * h));
  }
  if (x + 4.0 * h <= domain.hi && x >= domain.lo) {
    return w * (-25.0 * f(x) + 48.0 * f(x + h) + -36.0 * f(x + 2.0 * h) + 16.0 * f(x + 3.0 * h) +
                -3.0 * f(x + 4.0 * h));
  }
  if (x - 4.0 * h >= domain.lo && x <= domain.hi) {
    return w * (25.0 * f(x) + -48.0 * f(x - h) + 36.0 * f(x - 2.0 * h) + -16.0 * f(x - 3.0 * h) +
                3.0 * f(x - 4.0 * h));
  }
  throw Error(ErrorCode::OutOfDomain, "stencil does not fit inside the domain");
}

/// Derivative of grid samples with spacing h: central differences inside,
/// one-sided fourth-order formulas on the two points nearest each end.
template <class V>
std::vector<V> stencil_d1(const std::vector<V>& v, double h) {
  const std::size_t n = v.size();
  if (n < 5) throw Error(ErrorCode::GridTooSmall, "stencil needs at least 5 grid points");
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "stencil step must be positive");
  const double w = 1.0 / (12.0 * h);
  std::vector<V> d(n);
  d[0] = w * (-25.0 * v[0] + 48.0 * v[1] + -36.0 * v[2] + 16.0 * v[3] + -3.0 * v[4]);
  d[1] = w * (-3.0 * v[0] + -10.0 * v[1] + 18.0 * v[2] + -6.0 * v[3] + v[4]);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = w * (v[i - 2] + -8.0 * v[i - 1] + 8.0 * v[i + 1] + -1.0 * v[i + 2]);
  }
  d[n - 2] = w * (-1.0 * v[n - 5] + 6.0 * v[n - 4] + -18.0 * v[n - 3] + 10.0 * v[n - 2] +
                  3.0 * v[n - 1]);
  d[n - 1] = w * (25.0 * v[n - 1] + -48.0 * v[n - 2] + 36.0 * v[n - 3] + -16.0 * v[n - 4] +
                  3.0 * v[n - 5]);
  return d;
}

/// Second derivative as the first-derivative stencil of the first-derivative field.
template <class V>
std::vector<V> stencil_d2(const std::vector<V>& v, double h) {
  return stencil_d1(stencil_d1(v, h), h);
}

}  // namespace dualruled
