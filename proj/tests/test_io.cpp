#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dualruled/error.hpp"
#include "dualruled/io.hpp"

using namespace dualruled;

namespace {

int count_prefix(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) n += line.rfind(prefix, 0) == 0;
  return n;
}

std::string helicoid_table(int n, bool commas) {
  std::ostringstream t;
  t << "# helicoid\n" << (commas ? "u,ex,ey,ez,esx,esy,esz\n" : "u ex ey ez esx esy esz\n");
  for (int i = 0; i < n; ++i) {
    const double u = 0.02 * i;
    const char sep = commas ? ',' : ' ';
    t.precision(17);
    t << u << sep << std::cos(u) << sep << std::sin(u) << sep << 0 << sep << -u * std::sin(u) << sep
      << u * std::cos(u) << sep << 0 << "  # row\n";
  }
  return t.str();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("smallest mesh") {
  const CurveSpec h = make_preset("helicoid", {});
  std::ostringstream out;
  write_obj(out, sample_ruled_surface(h, {0, 1, 2}, {-1, 1, 2}));
  CHECK(count_prefix(out.str(), "v ") == 4);
  CHECK(count_prefix(out.str(), "f ") == 2);
  CHECK(out.str() == "v -1.000000000 0.000000000 0.000000000\n"
                     "v 1.000000000 0.000000000 0.000000000\n"
                     "v -0.540302306 -0.841470985 1.000000000\n"
                     "v 0.540302306 0.841470985 1.000000000\n"
                     "f 1 3 4\n"
                     "f 1 4 2\n");
}

TEST_CASE("mesh faces stay in range and are not degenerate") {
  const CurveSpec h = make_preset("helicoid", {});
  const RuledPatch p = sample_smarandache_surface(Kind::ETG, h, {0.5, 6.0, 12}, {-1, 1, 5});
  std::ostringstream out;
  write_obj(out, p);
  std::istringstream in(out.str());
  std::vector<Vec3> v;
  std::string tag;
  int faces = 0;
  while (in >> tag) {
    if (tag == "v") {
      Vec3 x;
      in >> x.x >> x.y >> x.z;
      v.push_back(x);
    } else {
      std::size_t a, b, c;
      in >> a >> b >> c;
      REQUIRE((a >= 1 && b >= 1 && c >= 1 && a <= v.size() && b <= v.size() && c <= v.size()));
      CHECK(norm(cross(v[b - 1] - v[a - 1], v[c - 1] - v[a - 1])) > 1e-12);
      ++faces;
    }
  }
  CHECK(v.size() == 60);
  CHECK(faces == 2 * 11 * 4);
}

TEST_CASE("analysis table") {
  const CurveSpec h = make_preset("helicoid", {});
  std::ostringstream a, b;
  write_analysis(a, h, {0.5, 5.0, 10});
  write_analysis(b, h, {0.5, 5.0, 10});
  CHECK(a.str() == b.str());
  std::istringstream in(a.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "s,Delta,gamma,delta,gamma_bar_du,R_re,R_du,rho_re,rho_du,developable");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.find(",1,0,") != std::string::npos);
    CHECK(line.substr(line.size() - 5) == "false");
  }
  CHECK(rows == 10);

  std::ostringstream c;
  write_analysis(c, make_preset("cone", {0.8, 0.6}), {0.5, 3.0, 5});
  std::istringstream cin(c.str());
  std::getline(cin, line);
  while (std::getline(cin, line)) {
    CHECK(line.find(",0,0.75,") != std::string::npos);
    CHECK(line.substr(line.size() - 4) == "true");
  }
}

TEST_CASE("reading sampled curves") {
  for (bool commas : {true, false}) {
    std::istringstream in(helicoid_table(200, commas));
    const CurveSpec c = read_sampled_curve(in, "h");
    CHECK(c.name() == "h");
    CHECK(c.is_arclength());
    CHECK(distribution_parameter(c, 1.5) == doctest::Approx(1.0).epsilon(1e-6));
  }
  std::istringstream bad("u ex ey ez esx esy esz\n0 1 0 0 0 0\n");
  try {
    read_sampled_curve(bad, "bad");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
  std::string off = helicoid_table(100, true);
  off.replace(off.find("\n0.02,") + 1, 6, "0.02,2,");
  std::istringstream offin(off);
  CHECK_THROWS_AS(read_sampled_curve(offin, "off"), Error);
  try {
    load_sampled_curve("/nonexistent/curve.csv");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("derived curve round trip") {
  const CurveSpec h = make_preset("helicoid", {});
  const SmarandacheResult r = analyze(Kind::ET, h, {0.5, 5.0, 16});
  std::ostringstream out;
  write_sampled_curve(out, r);
  std::istringstream in(out.str());
  const CurveSpec back = read_sampled_curve(in, "et");
  // ET of the helicoid is a great circle traversed at unit speed
  CHECK(back.domain().length() == doctest::Approx(r.grid.back() - r.grid.front()).epsilon(1e-9));
  CHECK(std::fabs(darboux_frame(back, 1.0).gamma_bar.re) <= 1e-6);
}

TEST_CASE("Smarandache report") {
  const CurveSpec h = make_preset("helicoid", {});
  std::ostringstream out;
  write_smarandache_report(out, analyze(Kind::EG, h, {0.5, 5.0, 6}));
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  CHECK(header.find("theta,theta_star") != std::string::npos);
  std::getline(in, row);
  CHECK(row.find("0.785398163397,0") != std::string::npos);

  std::ostringstream et;
  write_smarandache_report(et, analyze(Kind::ET, h, {0.5, 5.0, 6}));
  CHECK(et.str().find("theta") == std::string::npos);
}

}
