#include "dualruled/dual_linalg.hpp"

#include <algorithm>

namespace dualruled {

DualVec3 operator/(const DualVec3& a, const DualScalar& k) {
  return {a.x / k, a.y / k, a.z / k};
}

DualScalar norm(const DualVec3& a) {
  const Vec3 re = a.real();
  const double n = dualruled::norm(re);
  if (n == 0.0) throw Error(ErrorCode::ZeroRealVector, "norm of a dual vector with zero real part");
  return {n, dot(re, a.dual()) / n};
}

DualVec3 normalize(const DualVec3& a) { return a / norm(a); }

bool is_dual_unit(const DualVec3& a, double tol) {
  const Vec3 re = a.real();
  return std::abs(dualruled::norm(re) - 1.0) <= tol && std::abs(dot(re, a.dual())) <= tol;
}

double max_abs_diff(const DualVec3& a, const DualVec3& b) {
  return std::max(max_abs_diff(a.real(), b.real()), max_abs_diff(a.dual(), b.dual()));
}

DualAngle dual_angle(const DualVec3& a, const DualVec3& b, double tol) {
  const DualScalar c = dot(a, b);
  // Rounding can push the cosine a hair outside [-1, 1].
  const double cos_theta = std::clamp(c.re, -1.0, 1.0);
  const double theta = std::acos(cos_theta);
  const double sin_theta = std::sin(theta);
  if (std::abs(sin_theta) < tol) {
    throw Error(ErrorCode::ParallelLines, "dual angle of parallel lines has no dual part");
  }
  return {theta, -c.du / sin_theta};
}

DualVec3 mat_apply(const DualMat3& m, const DualVec3& v) {
  return {dot(m.row(0), v), dot(m.row(1), v), dot(m.row(2), v)};
}

DualMat3 mat_transpose(const DualMat3& m) {
  DualMat3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t(c, r) = m(r, c);
  return t;
}

DualMat3 mat_mul(const DualMat3& a, const DualMat3& b) {
  DualMat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      DualScalar acc;
      for (int k = 0; k < 3; ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  return out;
}

DualScalar mat_det(const DualMat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double orthogonality_defect(const DualMat3& a) {
  const DualMat3 at = mat_transpose(a);
  const DualMat3 p = mat_mul(a, at);
  const DualMat3 q = mat_mul(at, a);
  double worst = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const double id = r == c ? 1.0 : 0.0;
      worst = std::max({worst, std::abs(p(r, c).re - id), std::abs(p(r, c).du),
                        std::abs(q(r, c).re - id), std::abs(q(r, c).du)});
    }
  const DualScalar d = mat_det(a);
  return std::max({worst, std::abs(d.re - 1.0), std::abs(d.du)});
}

bool is_dual_orthogonal(const DualMat3& a, double tol) { return orthogonality_defect(a) <= tol; }

}  // namespace dualruled
