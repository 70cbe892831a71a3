#pragma once

// Oriented lines <-> dual unit vectors, and ruled-surface sampling.

#include <functional>
#include <vector>

#include "dualruled/curve.hpp"

namespace dualruled {

struct Line3 {
  Vec3 point;
  Vec3 direction;  // unit
};

inline constexpr double kUnitDirectionTolerance = 1e-12;
inline constexpr double kDualUnitTolerance = 1e-9;

/// a + ε(p × a). Throws NotUnitDirection when |‖a‖ − 1| > 1e-12.
DualVec3 line_to_dual(const Vec3& p, const Vec3& a);

/// Direction a and the foot of the perpendicular from the origin, a × a*.
/// Throws NotDualUnit.
Line3 dual_to_line(const DualVec3& v);

/// vertices[i][j] = base(s_grid[i]) + u_grid[j] * ruling(s_grid[i]).
struct RuledPatch {
  std::vector<double> s_grid;
  std::vector<double> u_grid;
  std::vector<std::vector<Vec3>> vertices;

  std::size_t rows() const { return s_grid.size(); }
  std::size_t cols() const { return u_grid.size(); }
};

/// Generating data of a ruled surface at parameter s.
using LineField = std::function<Line3(double s)>;

RuledPatch sample_ruled_surface(const LineField& lines, const Range& s, const Range& u);

/// Surface of the curve's lines, each anchored at its canonical point a × a*.
RuledPatch sample_ruled_surface(const CurveSpec& curve, const Range& s, const Range& u);

}  // namespace dualruled
