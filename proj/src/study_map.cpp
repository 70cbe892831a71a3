#include "dualruled/study_map.hpp"

#include <cmath>
#include <string>

namespace dualruled {

DualVec3 line_to_dual(const Vec3& p, const Vec3& a) {
  if (!(std::abs(norm(a) - 1.0) <= kUnitDirectionTolerance)) {
    throw Error(ErrorCode::NotUnitDirection, "line direction is not a unit vector");
  }
  return DualVec3(a, cross(p, a));
}

Line3 dual_to_line(const DualVec3& v) {
  if (!is_dual_unit(v, kDualUnitTolerance)) {
    throw Error(ErrorCode::NotDualUnit, "vector is not on the dual unit sphere");
  }
  const Vec3 a = v.real();
  return {cross(a, v.dual()), a};
}

namespace {

void check_range(const Range& r, const char* what) {
  if (r.count < 2 || !(r.hi > r.lo)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " range must be nonempty with at least 2 samples");
  }
}

}  // namespace

RuledPatch sample_ruled_surface(const LineField& lines, const Range& s, const Range& u) {
  check_range(s, "s");
  check_range(u, "u");
  RuledPatch patch;
  patch.s_grid.resize(s.count);
  patch.u_grid.resize(u.count);
  for (std::size_t j = 0; j < u.count; ++j) patch.u_grid[j] = u.at(j);
  patch.vertices.resize(s.count);
  for (std::size_t i = 0; i < s.count; ++i) {
    patch.s_grid[i] = s.at(i);
    const Line3 l = lines(patch.s_grid[i]);
    auto& row = patch.vertices[i];
    row.resize(u.count);
    for (std::size_t j = 0; j < u.count; ++j) row[j] = l.point + patch.u_grid[j] * l.direction;
  }
  return patch;
}

RuledPatch sample_ruled_surface(const CurveSpec& curve, const Range& s, const Range& u) {
  return sample_ruled_surface([&](double x) { return dual_to_line(curve.at(x)); }, s, u);
}

}  // namespace dualruled
