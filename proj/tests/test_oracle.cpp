#include <doctest.h>

#include <cmath>
#include <limits>

#include "dualruled/error.hpp"
#include "dualruled/oracle.hpp"
#include "dualruled/stencil.hpp"

using namespace dualruled;

TEST_SUITE("oracle") {

TEST_CASE("pointwise stencil") {
  const Interval d{-10, 10};
  const double h = 1e-3;
  CHECK(std::fabs(stencil_first([](double x) { return std::sin(x); }, 0.7, h, d) - std::cos(0.7)) <= 1e-10);
  CHECK(stencil_first([](double) { return 3.0; }, 1.0, h, d) == 0.0);
  const auto quartic = [](double x) { return 2 * x * x * x * x - x * x * x + 5 * x - 1; };
  const double x = 0.37;
  CHECK(stencil_first(quartic, x, 0.1, d) == doctest::Approx(8 * x * x * x - 3 * x * x + 5).epsilon(1e-12));
  // near the ends the one-sided formula is still exact on quartics
  CHECK(stencil_first(quartic, -9.95, 0.1, d) == doctest::Approx(8 * -9.95 * 9.95 * 9.95 - 3 * 9.95 * 9.95 + 5).epsilon(1e-10));
  CHECK_THROWS_AS(stencil_first(quartic, 0.0, 1.0, Interval{-1, 1}), Error);
}

TEST_CASE("grid stencils") {
  const double h = 0.01;
  std::vector<double> s, c, q;
  for (int i = 0; i < 200; ++i) {
    const double x = i * h;
    s.push_back(std::sin(x));
    c.push_back(7.0);
    q.push_back(x * x * x * x);
  }
  const auto ds = stencil_d1(s, h);
  const auto dc = stencil_d1(c, h);
  const auto dq = stencil_d1(q, h);
  const auto d2 = stencil_d2(s, h);
  for (int i = 0; i < 200; ++i) {
    const double x = i * h;
    CHECK(std::fabs(ds[i] - std::cos(x)) <= 1e-8);
    CHECK(dc[i] == 0.0);
    CHECK(std::fabs(dq[i] - 4 * x * x * x) <= 1e-9);
    CHECK(std::fabs(d2[i] + std::sin(x)) <= 1e-5);
  }
  CHECK_THROWS_AS(stencil_d1(std::vector<double>(4, 0.0), h), Error);
}

TEST_CASE("stencil convergence") {
  const Interval d{-5, 5};
  const auto f = [](double x) { return std::exp(std::sin(x)); };
  const auto df = [](double x) { return std::cos(x) * std::exp(std::sin(x)); };
  double prev = std::fabs(stencil_first(f, 0.4, 0.08, d) - df(0.4));
  for (double h : {0.04, 0.02, 0.01}) {
    const double err = std::fabs(stencil_first(f, 0.4, h, d) - df(0.4));
    CHECK((err * 8 <= prev || err < 1e-11));
    prev = err;
  }
}

TEST_CASE("frames from samples") {
  const CurveSpec c = make_preset("latitude-drift", {});
  const double h = 0.01;
  std::vector<DualVec3> pts;
  for (int i = 0; i < 400; ++i) pts.push_back(c.at(0.5 + i * h));
  const OracleFrames o = recompute_frame(pts, 0.5, h);
  REQUIRE(o.frames.size() == 400);
  for (int i : {3, 100, 250, 396}) {
    const DarbouxFrame ref = darboux_frame(c, 0.5 + i * h);
    CHECK(o.regular[i]);
    CHECK(max_abs_diff(o.frames[i].t, ref.t) <= 1e-6);
    CHECK(max_abs_diff(o.frames[i].g, ref.g) <= 1e-6);
    CHECK(std::fabs(o.frames[i].gamma_bar.re - ref.gamma_bar.re) <= 1e-6);
    CHECK(std::fabs(o.frames[i].gamma_bar.du - ref.gamma_bar.du) <= 1e-5);
    CHECK(std::fabs(o.rate[i].du - ref.delta_param) <= 1e-6);
  }
  // cumulative dual length against the curve's own table
  const DualScalar len = o.frames[399].s_bar;
  const DualScalar ref = c.dual_arclength_at(0.5 + 399 * h) - c.dual_arclength_at(0.5);
  CHECK(std::fabs(len.re - ref.re) <= 1e-8);
  CHECK(std::fabs(len.du - ref.du) <= 1e-7);
}

TEST_CASE("oracle input checks") {
  std::vector<DualVec3> pts(3, DualVec3(Vec3{1, 0, 0}, Vec3{}));
  CHECK_THROWS_AS(recompute_frame(pts, 0.0, 0.1), Error);
  std::vector<DualVec3> off(20, DualVec3(Vec3{1, 0, 0}, Vec3{0.5, 0, 0}));
  try {
    recompute_frame(off, 0.0, 0.1);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDualUnit);
  }
  // a stalled stretch is kept but flagged
  std::vector<DualVec3> stall(20, DualVec3(Vec3{0, 0, 1}, Vec3{}));
  const OracleFrames o = recompute_frame(stall, 0.0, 0.1);
  CHECK_FALSE(o.regular[10]);
}

TEST_CASE("residual comparison") {
  const std::vector<DualScalar> a{DualScalar(1, 2), DualScalar(3, 4)};
  const std::vector<DualScalar> b{DualScalar(1, 2.5), DualScalar(3.1, 4)};
  ResidualReport r = compare("x", a, b, 0.2, 0.6);
  CHECK(r.samples == 2);
  CHECK(r.max_re == doctest::Approx(0.1));
  CHECK(r.max_du == doctest::Approx(0.5));
  CHECK(r.verdict == Verdict::Verified);
  CHECK(compare("x", a, b, 0.05, 0.6).verdict == Verdict::Suspect);

  const std::vector<DualScalar> bad{DualScalar(std::numeric_limits<double>::quiet_NaN(), 0), DualScalar(3, 4)};
  r = compare("y", bad, a, 1, 1);
  CHECK(std::isinf(r.max_re));
  CHECK(r.verdict == Verdict::Suspect);
  CHECK_THROWS_AS(compare("z", a, std::vector<DualScalar>{DualScalar(1)}, 1, 1), Error);
  CHECK(std::string(to_string(Verdict::HypothesisNotMet)) == "hypothesis-not-met");
}

}
