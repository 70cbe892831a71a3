#pragma once

// Real and dual 3-vectors, dual 3x3 matrices, and the dual angle between
// two oriented lines.

#include <array>
#include <cmath>

#include "dualruled/dual_scalar.hpp"

namespace dualruled {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double k) {
    x *= k;
    y *= k;
    z *= k;
    return *this;
  }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator*(Vec3 a, double k) { return a *= k; }
constexpr Vec3 operator*(double k, Vec3 a) { return a *= k; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double max_abs_diff(const Vec3& a, const Vec3& b) {
  return std::fmax(std::fabs(a.x - b.x), std::fmax(std::fabs(a.y - b.y), std::fabs(a.z - b.z)));
}

/// Triple of dual numbers; equivalently the real pair (real(), dual()).
struct DualVec3 {
  DualScalar x;
  DualScalar y;
  DualScalar z;

  constexpr DualVec3() = default;
  constexpr DualVec3(DualScalar x_, DualScalar y_, DualScalar z_) : x(x_), y(y_), z(z_) {}
  constexpr DualVec3(const Vec3& real, const Vec3& dual)
      : x(real.x, dual.x), y(real.y, dual.y), z(real.z, dual.z) {}

  constexpr Vec3 real() const { return {x.re, y.re, z.re}; }
  constexpr Vec3 dual() const { return {x.du, y.du, z.du}; }

  constexpr DualScalar& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr const DualScalar& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr DualVec3& operator+=(const DualVec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr DualVec3& operator-=(const DualVec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr DualVec3 operator-() const { return {-x, -y, -z}; }
  friend constexpr bool operator==(const DualVec3&, const DualVec3&) = default;
};

constexpr DualVec3 operator+(DualVec3 a, const DualVec3& b) { return a += b; }
constexpr DualVec3 operator-(DualVec3 a, const DualVec3& b) { return a -= b; }
constexpr DualVec3 operator*(const DualScalar& k, const DualVec3& a) {
  return {k * a.x, k * a.y, k * a.z};
}
constexpr DualVec3 operator*(const DualVec3& a, const DualScalar& k) { return k * a; }
/// Componentwise dual division; throws ZeroRealPart.
DualVec3 operator/(const DualVec3& a, const DualScalar& k);

constexpr DualScalar dot(const DualVec3& a, const DualVec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr DualVec3 cross(const DualVec3& a, const DualVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// ‖ã‖ = ‖a‖ + ε⟨a, a*⟩/‖a‖. Throws ZeroRealVector when a = 0.
DualScalar norm(const DualVec3& a);
/// ã / ‖ã‖. Throws ZeroRealVector.
DualVec3 normalize(const DualVec3& a);
/// |‖a‖ − 1| <= tol and |⟨a, a*⟩| <= tol.
bool is_dual_unit(const DualVec3& a, double tol);

/// Largest componentwise deviation over both parts.
double max_abs_diff(const DualVec3& a, const DualVec3& b);

/// θ̃ = θ + εθ*: line angle in [0, π] and shortest distance between the lines.
struct DualAngle {
  double theta = 0.0;
  double theta_star = 0.0;
};

inline constexpr double kParallelTolerance = 1e-9;

/// Dual angle between two dual unit vectors via cos θ̃ = cos θ − εθ* sin θ.
/// Throws ParallelLines when |sin θ| < tol.
DualAngle dual_angle(const DualVec3& a, const DualVec3& b, double tol = kParallelTolerance);

class DualMat3 {
 public:
  constexpr DualMat3() = default;
  constexpr DualMat3(const DualVec3& r0, const DualVec3& r1, const DualVec3& r2)
      : rows_{r0, r1, r2} {}

  static constexpr DualMat3 identity() {
    return {DualVec3{1.0, 0.0, 0.0}, DualVec3{0.0, 1.0, 0.0}, DualVec3{0.0, 0.0, 1.0}};
  }

  constexpr DualScalar& operator()(int r, int c) { return rows_[r][c]; }
  constexpr const DualScalar& operator()(int r, int c) const { return rows_[r][c]; }
  constexpr const DualVec3& row(int r) const { return rows_[r]; }
  constexpr DualVec3& row(int r) { return rows_[r]; }

  friend constexpr bool operator==(const DualMat3&, const DualMat3&) = default;

 private:
  std::array<DualVec3, 3> rows_{};
};

DualVec3 mat_apply(const DualMat3& m, const DualVec3& v);
DualMat3 mat_mul(const DualMat3& a, const DualMat3& b);
DualMat3 mat_transpose(const DualMat3& m);
/// Cofactor expansion along the first row.
DualScalar mat_det(const DualMat3& m);
/// Every entry of AAᵗ − I and AᵗA − I, and det(A) − 1, within tol in both parts.
bool is_dual_orthogonal(const DualMat3& a, double tol);
/// The largest such deviation; is_dual_orthogonal(a, tol) == (orthogonality_defect(a) <= tol).
double orthogonality_defect(const DualMat3& a);

}  // namespace dualruled
