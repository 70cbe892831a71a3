#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dualruled/error.hpp"
#include "dualruled/smarandache.hpp"
#include "dualruled/study_map.hpp"

using namespace dualruled;

TEST_SUITE("study-map") {

TEST_CASE("line to dual vector") {
  CHECK(line_to_dual({0, 0, 1}, {1, 0, 0}) == DualVec3(Vec3{1, 0, 0}, Vec3{0, 1, 0}));
  const Vec3 a{0, 0.6, -0.8};
  CHECK(line_to_dual({0, 0, 0}, a) == DualVec3(a, Vec3{}));
  for (double s : {0.0, 0.4, 2.2}) {
    const DualVec3 v = line_to_dual({0, 0, s}, {std::cos(s), std::sin(s), 0});
    CHECK(max_abs_diff(v, DualVec3(Vec3{std::cos(s), std::sin(s), 0},
                                   Vec3{-s * std::sin(s), s * std::cos(s), 0})) <= 1e-15);
  }
  try {
    line_to_dual({0, 0, 0}, {1, 1, 0});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnitDirection);
  }
}

TEST_CASE("dual vector to line") {
  Line3 l = dual_to_line(DualVec3(Vec3{1, 0, 0}, Vec3{0, 1, 0}));
  CHECK(l.point == Vec3{0, 0, 1});
  CHECK(l.direction == Vec3{1, 0, 0});
  l = dual_to_line(DualVec3(Vec3{0, 1, 0}, Vec3{}));
  CHECK(l.point == Vec3{0, 0, 0});

  for (double s : {0.3, 1.0, 4.0}) {
    l = dual_to_line(DualVec3(Vec3{std::cos(s), std::sin(s), 0},
                              Vec3{-s * std::sin(s), s * std::cos(s), 0}));
    CHECK(max_abs_diff(l.point, Vec3{0, 0, s}) <= 1e-15);
  }
  try {
    dual_to_line(DualVec3(Vec3{1, 0, 0}, Vec3{1, 0, 0}));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDualUnit);
  }
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    Vec3 a{n(rng), n(rng), n(rng)};
    a = a * (1.0 / norm(a));
    const Vec3 p{5 * n(rng), 5 * n(rng), 5 * n(rng)};
    const Line3 l = dual_to_line(line_to_dual(p, a));
    CHECK(max_abs_diff(l.direction, a) <= 1e-12);
    CHECK(norm(cross(l.point - p, a)) <= 1e-12);
    CHECK(std::fabs(dot(l.point, a)) <= 1e-12);
  }
}

TEST_CASE("helicoid surface") {
  const CurveSpec h = make_preset("helicoid", {});
  const RuledPatch p = sample_ruled_surface(h, {0.0, 2 * std::numbers::pi, 33}, {-1, 1, 9});
  REQUIRE(p.rows() == 33);
  REQUIRE(p.cols() == 9);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      const double s = p.s_grid[i], u = p.u_grid[j];
      CHECK(max_abs_diff(p.vertices[i][j], Vec3{u * std::cos(s), u * std::sin(s), s}) <= 1e-12);
    }
  }
}

TEST_CASE("EG surface of the helicoid") {
  const CurveSpec h = make_preset("helicoid", {});
  const RuledPatch p = sample_smarandache_surface(Kind::EG, h, {0.5, 6.0, 12}, {-1, 1, 5});
  const double r = 1 / std::sqrt(2.0);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      const double s = p.s_grid[i], v = p.u_grid[j];
      CHECK(max_abs_diff(p.vertices[i][j], Vec3{v * r * std::cos(s), v * r * std::sin(s), s + v * r}) <=
            1e-12);
    }
  }
}

TEST_CASE("cone rulings pass through the apex") {
  const CurveSpec c = make_preset("cone", {0.8, 0.6});
  const RuledPatch p = sample_ruled_surface(c, {0.0, 4.0, 10}, {0, 1, 2});
  for (const auto& row : p.vertices) CHECK(norm(row[0]) <= 1e-15);
}

TEST_CASE("patch ranges are validated") {
  const LineField f = [](double) { return Line3{{0, 0, 0}, {1, 0, 0}}; };
  CHECK_THROWS_AS(sample_ruled_surface(f, {0, 1, 1}, {0, 1, 2}), Error);
  CHECK_THROWS_AS(sample_ruled_surface(f, {1, 0, 4}, {0, 1, 2}), Error);
  CHECK_NOTHROW(sample_ruled_surface(f, {0, 1, 2}, {0, 1, 2}));
}

}
