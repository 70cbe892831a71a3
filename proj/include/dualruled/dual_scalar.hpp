#pragma once

/**
 * @file dual_scalar.hpp
 * @brief Dual numbers a + εa* with ε² = 0.
 *
 * DualScalar is a plain value type. Arithmetic is exact in the sense that
 * the multiplication rule (a + εa*)(b + εb*) = ab + ε(ab* + a*b) is applied
 * literally, with no truncation beyond the ε² = 0 rule.
 *
 * Analytic functions are lifted with f(x + εx*) = f(x) + εx*f'(x); the named
 * kernels below (sqrt, sin, cos, asin, acos, atan, pow) all go through lift().
 *
 * D is not an ordered ring, so there are no comparison operators other than
 * exact equality. Use real_less() when an ordering on the real part is needed.
 */

#include <cmath>
#include <string>
#include <string_view>

#include "dualruled/error.hpp"

namespace dualruled {

/// Divisors with |re| at or below this are treated as pure dual (non-invertible).
inline constexpr double kPureDualThreshold = 1e-300;

struct DualScalar {
  double re = 0.0;
  double du = 0.0;

  constexpr DualScalar() = default;
  // Implicit so that formulas like 2 + g * g read naturally.
  constexpr DualScalar(double real) : re(real) {}  // NOLINT
  constexpr DualScalar(double real, double dual) : re(real), du(dual) {}

  static constexpr DualScalar epsilon() { return {0.0, 1.0}; }

  constexpr DualScalar operator-() const { return {-re, -du}; }

  constexpr DualScalar& operator+=(const DualScalar& o) {
    re += o.re;
    du += o.du;
    return *this;
  }
  constexpr DualScalar& operator-=(const DualScalar& o) {
    re -= o.re;
    du -= o.du;
    return *this;
  }
  constexpr DualScalar& operator*=(const DualScalar& o) {
    du = re * o.du + du * o.re;
    re *= o.re;
    return *this;
  }
  DualScalar& operator/=(const DualScalar& o);

  friend constexpr bool operator==(const DualScalar&, const DualScalar&) = default;
};

constexpr DualScalar operator+(DualScalar a, const DualScalar& b) { return a += b; }
constexpr DualScalar operator-(DualScalar a, const DualScalar& b) { return a -= b; }
constexpr DualScalar operator*(const DualScalar& a, const DualScalar& b) {
  return {a.re * b.re, a.re * b.du + a.du * b.re};
}

/// Throws ErrorCode::ZeroRealPart when |b.re| <= kPureDualThreshold.
DualScalar operator/(const DualScalar& a, const DualScalar& b);

inline DualScalar& DualScalar::operator/=(const DualScalar& o) { return *this = *this / o; }

inline constexpr DualScalar kEpsilon = DualScalar::epsilon();

/// Ordering on the real part only.
constexpr bool real_less(const DualScalar& a, const DualScalar& b) { return a.re < b.re; }

/// Lifts a differentiable real function: f(x) + ε·x*·f'(x).
/// A zero dual part short-circuits f' so boundary points such as sqrt(0)
/// stay representable when nothing is being propagated.
template <class F, class FPrime>
DualScalar lift(F&& f, FPrime&& fprime, const DualScalar& x) {
  const double value = f(x.re);
  const double dual = x.du == 0.0 ? 0.0 : x.du * fprime(x.re);
  return {value, dual};
}

DualScalar sqrt(const DualScalar& x);
DualScalar sin(const DualScalar& x);
DualScalar cos(const DualScalar& x);
DualScalar asin(const DualScalar& x);
DualScalar acos(const DualScalar& x);
DualScalar atan(const DualScalar& x);

/// Exponent num/den of a rational power.
struct Rational {
  int num = 1;
  int den = 1;
  constexpr double value() const { return static_cast<double>(num) / den; }
};

/// x^q with q rational; requires x.re > 0.
DualScalar pow(const DualScalar& x, Rational q);

/// Renders "a + εb" (or "a - εb") with the given number of significant digits.
std::string format(const DualScalar& x, int precision = 12);

/// Parses the form written by format(). Accepts "ε" or "eps" for the dual unit,
/// a lone real "a", or a lone dual term "εb". Throws ErrorCode::Parse.
DualScalar parse_dual(std::string_view text);

}  // namespace dualruled
