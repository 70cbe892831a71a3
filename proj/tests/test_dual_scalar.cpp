#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dualruled/dual_scalar.hpp"
#include "dualruled/error.hpp"

using namespace dualruled;

namespace {

bool same(const DualScalar& a, const DualScalar& b, double tol = 0.0) {
  return std::fabs(a.re - b.re) <= tol && std::fabs(a.du - b.du) <= tol;
}

}  // namespace

TEST_SUITE("dual-scalar") {

TEST_CASE("multiplication rule") {
  CHECK(same(DualScalar(2, 3) * DualScalar(4, 5), DualScalar(8, 22)));
  CHECK(same(kEpsilon * kEpsilon, DualScalar(0, 0)));
  const DualScalar a(-1.25, 7.5);
  CHECK(same(a * DualScalar(1, 0), a));
}

TEST_CASE("division") {
  CHECK(same(DualScalar(1, 0) / DualScalar(2, 0), DualScalar(0.5, 0)));
  const DualScalar a(3.5, -2.0);
  CHECK(same(a / a, DualScalar(1, 0), 1e-15));
  CHECK(same(DualScalar(1, 0) / DualScalar(1, 1), DualScalar(1, -1)));
}

TEST_CASE("division by a pure dual number") {
  try {
    (void)(DualScalar(1, 1) / DualScalar(0, 2));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroRealPart);
  }
  CHECK_THROWS_AS((void)(DualScalar(1, 1) / DualScalar(1e-301, 2)), Error);
}

TEST_CASE("analytic kernels") {
  CHECK(same(sin(DualScalar(std::numbers::pi / 2, 2)), DualScalar(1, 0), 1e-15));
  CHECK(same(sqrt(DualScalar(4, 4)), DualScalar(2, 1)));
  for (double x : {0.1, 0.4, 0.9}) {
    CHECK(sin(DualScalar(x)).du == 0.0);
    CHECK(atan(DualScalar(x)).du == 0.0);
    CHECK(asin(DualScalar(x)).du == 0.0);
  }
  const DualScalar x(0.3, 1.0);
  CHECK(cos(x).du == doctest::Approx(-std::sin(0.3)));
  CHECK(acos(x).du == doctest::Approx(-1.0 / std::sqrt(1 - 0.09)));
  CHECK(asin(x).du == doctest::Approx(1.0 / std::sqrt(1 - 0.09)));
  CHECK(atan(x).du == doctest::Approx(1.0 / 1.09));
}

TEST_CASE("kernel domains") {
  CHECK_THROWS_AS(sqrt(DualScalar(-1, 0)), Error);
  CHECK_THROWS_AS(sqrt(DualScalar(0, 1)), Error);
  CHECK_THROWS_AS(asin(DualScalar(1.5, 0)), Error);
  CHECK_THROWS_AS(pow(DualScalar(-2, 0), Rational{3, 2}), Error);
}

TEST_CASE("rational power") {
  const DualScalar x(2.0, 0.5);
  const DualScalar p = pow(x, Rational{3, 2});
  CHECK(p.re == doctest::Approx(std::pow(2.0, 1.5)));
  CHECK(p.du == doctest::Approx(1.5 * std::sqrt(2.0) * 0.5));
  CHECK(same(pow(x, Rational{2, 1}), x * x, 1e-14));
  CHECK(same(pow(x, Rational{-1, 2}) * sqrt(x), DualScalar(1, 0), 1e-15));
}

TEST_CASE("lifting matches polynomial evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    int c[7];
    for (int& v : c) v = small(rng);
    const DualScalar x(small(rng), small(rng));
    DualScalar horner(0.0);
    for (int k = 6; k >= 0; --k) horner = horner * x + DualScalar(c[k]);
    const auto f = [&](double t) {
      double r = 0;
      for (int k = 6; k >= 0; --k) r = r * t + c[k];
      return r;
    };
    const auto fp = [&](double t) {
      double r = 0;
      for (int k = 6; k >= 1; --k) r = r * t + k * c[k];
      return r;
    };
    CHECK(same(lift(f, fp, x), horner));
  }
}

TEST_CASE("format and parse") {
  CHECK(format(DualScalar(1.5, -2), 6) == "1.5 - ε2");
  CHECK(format(DualScalar(0, 0.25), 6) == "0 + ε0.25");
  for (const DualScalar v : {DualScalar(1.0 / 3.0, -2.5e-7), DualScalar(-4, 0), DualScalar(0, 1e300)}) {
    CHECK(same(parse_dual(format(v, 17)), v));
  }
  CHECK(same(parse_dual("3"), DualScalar(3, 0)));
  CHECK(same(parse_dual("eps2"), DualScalar(0, 2)));
  CHECK(same(parse_dual(" 1e-6 + ε1e-5 "), DualScalar(1e-6, 1e-5)));
  CHECK(same(parse_dual("-1 - eps 4"), DualScalar(-1, -4)));
  CHECK_THROWS_AS(parse_dual("1 + "), Error);
  CHECK_THROWS_AS(parse_dual("abc"), Error);
  CHECK_THROWS_AS(parse_dual(""), Error);
}

TEST_CASE("real-part comparison") {
  CHECK(real_less(DualScalar(1, 100), DualScalar(2, -100)));
  CHECK_FALSE(real_less(DualScalar(2, 0), DualScalar(2, 1)));
}

}
