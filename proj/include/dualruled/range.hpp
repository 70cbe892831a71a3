#pragma once

#include <cstddef>

namespace dualruled {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr bool contains(double x) const { return x >= lo && x <= hi; }
  constexpr double length() const { return hi - lo; }
};

/// `count` uniformly spaced samples covering [lo, hi] inclusive.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 2;

  constexpr double step() const { return count > 1 ? (hi - lo) / static_cast<double>(count - 1) : 0.0; }
  constexpr double at(std::size_t i) const {
    return i + 1 == count ? hi : lo + step() * static_cast<double>(i);
  }
  constexpr Interval interval() const { return {lo, hi}; }
};

}  // namespace dualruled
