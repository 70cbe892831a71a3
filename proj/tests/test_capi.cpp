#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "dualruled.h"

namespace {

std::string temp_path(const char* name) { return std::string(DR_TEST_TMP) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("presets and frames") {
  dr_curve* c = nullptr;
  REQUIRE(dr_curve_preset("helicoid", nullptr, 0, &c) == DR_OK);
  CHECK(std::string(dr_curve_name(c)) == "helicoid");
  dr_frame f{};
  REQUIRE(dr_curve_frame(c, 2.0, &f) == DR_OK);
  CHECK(f.e[0] == doctest::Approx(std::cos(2.0)));
  CHECK(f.e[4] == doctest::Approx(2 * std::cos(2.0)));
  CHECK(f.g[2] == doctest::Approx(1.0));
  CHECK(f.delta_param == doctest::Approx(1.0));
  CHECK(f.s_bar[1] == doctest::Approx(2.0));
  dr_curvature k{};
  REQUIRE(dr_curve_curvature(c, 2.0, &k) == DR_OK);
  CHECK(k.radius[0] == doctest::Approx(1.0));
  double lo = 0, hi = 0;
  REQUIRE(dr_curve_domain(c, &lo, &hi) == DR_OK);
  CHECK(lo < 0.0);
  CHECK(dr_curve_frame(c, hi + 1, &f) == DR_E_OUT_OF_DOMAIN);
  CHECK(std::strlen(dr_last_error()) > 0);
  dr_curve_free(c);
}

TEST_CASE("errors") {
  dr_curve* c = nullptr;
  CHECK(dr_curve_preset("spiral", nullptr, 0, &c) == DR_E_INVALID_ARGUMENT);
  CHECK(c == nullptr);
  CHECK(std::string(dr_last_error()).find("spiral") != std::string::npos);
  CHECK(dr_curve_preset(nullptr, nullptr, 0, &c) == DR_E_INVALID_ARGUMENT);
  CHECK(dr_curve_load("/nonexistent.csv", &c) == DR_E_IO);
  CHECK(std::string(dr_status_name(DR_E_INVALID_CURVE)) == "InvalidCurve");
  dr_kind k;
  CHECK(dr_kind_parse("tg", &k) == DR_OK);
  CHECK(k == DR_KIND_TG);
  CHECK(dr_kind_parse("xy", &k) == DR_E_INVALID_ARGUMENT);
  dr_curve_free(nullptr);
  dr_ledger_free(nullptr);
}

TEST_CASE("lines") {
  const double p[3] = {0, 0, 1}, a[3] = {1, 0, 0};
  double v[6];
  REQUIRE(dr_line_to_dual(p, a, v) == DR_OK);
  CHECK(v[4] == 1.0);
  double q[3], d[3];
  REQUIRE(dr_dual_to_line(v, q, d) == DR_OK);
  CHECK(q[2] == 1.0);
  const double bad[3] = {2, 0, 0};
  CHECK(dr_line_to_dual(p, bad, v) == DR_E_NOT_UNIT_DIRECTION);
}

TEST_CASE("dual text") {
  char buf[64];
  REQUIRE(dr_dual_format(2, -0.5, 6, buf, sizeof buf) == DR_OK);
  CHECK(std::string(buf) == "2 - ε0.5");
  char tiny[4];
  CHECK(dr_dual_format(2, -0.5, 6, tiny, sizeof tiny) == DR_E_INVALID_ARGUMENT);
  double re = 0, du = 0;
  REQUIRE(dr_dual_parse(buf, &re, &du) == DR_OK);
  CHECK(re == 2.0);
  CHECK(du == -0.5);
  CHECK(dr_dual_parse("2 +", &re, &du) == DR_E_PARSE);
}

TEST_CASE("verify and ledger") {
  dr_curve* c = nullptr;
  const double p[2] = {0.8, 0.6};
  REQUIRE(dr_curve_preset("cone", p, 2, &c) == DR_OK);
  dr_range w{};
  REQUIRE(dr_curve_default_window(c, &w) == DR_OK);
  dr_ledger* l = nullptr;
  CHECK(dr_verify(c, &w, 0.0, 1e-5, &l) == DR_E_INVALID_ARGUMENT);
  REQUIRE(dr_verify(c, &w, 1e-6, 1e-5, &l) == DR_OK);
  CHECK(dr_ledger_passed(l) == 1);
  CHECK(dr_ledger_size(l) >= 49);
  dr_ledger_row row{};
  REQUIRE(dr_ledger_row_at(l, 0, &row) == DR_OK);
  CHECK(std::string(row.claim_id) == "eg.bertrand-offset");
  CHECK(std::string(row.gate) == "must-verify");
  CHECK(dr_ledger_row_at(l, 1000, &row) == DR_E_INVALID_ARGUMENT);
  const std::string path = temp_path("capi_ledger.tsv");
  REQUIRE(dr_ledger_write(l, path.c_str()) == DR_OK);
  CHECK(slurp(path).rfind("claim_id\t", 0) == 0);
  dr_ledger_free(l);
  dr_curve_free(c);
}

TEST_CASE("files") {
  dr_curve* c = nullptr;
  REQUIRE(dr_curve_preset("helicoid", nullptr, 0, &c) == DR_OK);
  const dr_range s{0.5, 5.0, 8}, u{-1, 1, 3};
  const std::string obj = temp_path("capi_eg.obj");
  REQUIRE(dr_write_mesh(c, DR_KIND_EG, &s, &u, obj.c_str()) == DR_OK);
  const std::string first = slurp(obj);
  REQUIRE(dr_write_mesh(c, DR_KIND_EG, &s, &u, obj.c_str()) == DR_OK);
  CHECK(slurp(obj) == first);
  const dr_range empty{1.0, 1.0, 8};
  CHECK(dr_write_mesh(c, DR_KIND_BASE, &empty, &u, obj.c_str()) == DR_E_INVALID_ARGUMENT);
  CHECK(dr_write_mesh(c, static_cast<dr_kind>(7), &s, &u, obj.c_str()) == DR_E_INVALID_ARGUMENT);
  CHECK(dr_write_analysis(c, &s, "/nonexistent-dir/a.csv") == DR_E_IO);

  const std::string report = temp_path("capi_tg.csv"), derived = temp_path("capi_tg_curve.csv");
  REQUIRE(dr_write_smarandache(c, DR_KIND_TG, &s, report.c_str(), derived.c_str()) == DR_OK);
  dr_curve* back = nullptr;
  REQUIRE(dr_curve_load(derived.c_str(), &back) == DR_OK);
  CHECK(std::string(dr_curve_name(back)) == "capi_tg_curve");
  dr_curve_free(back);
  dr_curve_free(c);
}

}
