#pragma once

// Truncated Taylor series used to differentiate the analytic preset curves
// exactly. A Jet holds f(u0), f'(u0), f''(u0)/2!, ... as coefficients.

#include <array>
#include <cmath>

namespace dualruled {

template <int Order>
struct Jet {
  std::array<double, Order + 1> c{};

  constexpr Jet() = default;
  constexpr Jet(double value) { c[0] = value; }  // NOLINT: constants mix freely

  static constexpr Jet variable(double u) {
    Jet j(u);
    if constexpr (Order >= 1) j.c[1] = 1.0;
    return j;
  }

  /// k-th derivative at the expansion point.
  constexpr double derivative(int k) const {
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return c[k] * fact;
  }

  constexpr Jet operator-() const {
    Jet r;
    for (int i = 0; i <= Order; ++i) r.c[i] = -c[i];
    return r;
  }
  constexpr Jet& operator+=(const Jet& o) {
    for (int i = 0; i <= Order; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr Jet& operator-=(const Jet& o) {
    for (int i = 0; i <= Order; ++i) c[i] -= o.c[i];
    return *this;
  }
};

template <int N>
constexpr Jet<N> operator+(Jet<N> a, const Jet<N>& b) { return a += b; }
template <int N>
constexpr Jet<N> operator-(Jet<N> a, const Jet<N>& b) { return a -= b; }
template <int N>
constexpr Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  for (int k = 0; k <= N; ++k)
    for (int j = 0; j <= k; ++j) r.c[k] += a.c[j] * b.c[k - j];
  return r;
}
template <int N>
constexpr Jet<N> operator*(double k, Jet<N> a) {
  for (auto& v : a.c) v *= k;
  return a;
}
template <int N>
constexpr Jet<N> operator*(Jet<N> a, double k) { return k * a; }

/// sin and cos together; each coefficient of one feeds the recurrence of the other.
template <int N>
void sincos(const Jet<N>& f, Jet<N>& s, Jet<N>& c) {
  s = Jet<N>(std::sin(f.c[0]));
  c = Jet<N>(std::cos(f.c[0]));
  for (int k = 1; k <= N; ++k) {
    double sk = 0.0;
    double ck = 0.0;
    for (int j = 1; j <= k; ++j) {
      sk += j * f.c[j] * c.c[k - j];
      ck -= j * f.c[j] * s.c[k - j];
    }
    s.c[k] = sk / k;
    c.c[k] = ck / k;
  }
}

template <int N>
Jet<N> sin(const Jet<N>& f) {
  Jet<N> s, c;
  sincos(f, s, c);
  return s;
}

template <int N>
Jet<N> cos(const Jet<N>& f) {
  Jet<N> s, c;
  sincos(f, s, c);
  return c;
}

/// f^p for f(u0) > 0.
template <int N>
Jet<N> pow(const Jet<N>& f, double p) {
  Jet<N> g(std::pow(f.c[0], p));
  for (int k = 1; k <= N; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += (p * j - (k - j)) * f.c[j] * g.c[k - j];
    g.c[k] = acc / (k * f.c[0]);
  }
  return g;
}

using Jet3 = Jet<3>;

struct JetVec3 {
  Jet3 x, y, z;
};

inline Jet3 dot(const JetVec3& a, const JetVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline JetVec3 operator*(const Jet3& k, const JetVec3& a) { return {k * a.x, k * a.y, k * a.z}; }

inline JetVec3 operator-(const JetVec3& a, const JetVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

inline JetVec3 cross(const JetVec3& a, const JetVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

}  // namespace dualruled
