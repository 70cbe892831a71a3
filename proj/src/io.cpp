#include "dualruled/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "dualruled/error.hpp"

namespace dualruled {

namespace {

std::string fmt(const char* spec, double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  if (buf[0] == '-' && std::strspn(buf + 1, "0.") == std::strlen(buf + 1)) return buf + 1;
  return buf;
}

std::string g12(double v) { return fmt("%.12g", v); }

bool split_fields(const std::string& line, std::vector<std::string>& fields) {
  fields.clear();
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) fields.push_back(cur);
  return !fields.empty();
}

bool to_double(const std::string& text, double& v) {
  char* end = nullptr;
  v = std::strtod(text.c_str(), &end);
  return end != text.c_str() && *end == '\0';
}

}  // namespace

CurveSpec read_sampled_curve(std::istream& in, const std::string& name) {
  std::vector<double> u;
  std::vector<Vec3> e, es;
  std::string line;
  std::vector<std::string> f;
  bool first = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!split_fields(line, f)) continue;
    double v[7];
    bool numeric = f.size() == 7;
    for (std::size_t i = 0; numeric && i < 7; ++i) numeric = to_double(f[i], v[i]);
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected 7 numeric fields");
    }
    first = false;
    u.push_back(v[0]);
    e.push_back({v[1], v[2], v[3]});
    es.push_back({v[4], v[5], v[6]});
  }
  return reparametrize_arclength(CurveSpec::sampled(name, std::move(u), std::move(e), std::move(es)));
}

CurveSpec load_sampled_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name.erase(0, slash + 1);
  if (auto dot = name.rfind('.'); dot != std::string::npos && dot > 0) name.erase(dot);
  return read_sampled_curve(in, name);
}

void write_sampled_curve(std::ostream& out, const SmarandacheResult& result) {
  out << "u,ex,ey,ez,esx,esy,esz\n";
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    const Vec3 a = result.grid_points[i].real();
    const Vec3 b = result.grid_points[i].dual();
    out << fmt("%.17g", result.grid[i]);
    for (double v : {a.x, a.y, a.z, b.x, b.y, b.z}) out << ',' << fmt("%.17g", v);
    out << '\n';
  }
}

void write_analysis(std::ostream& out, const CurveSpec& curve, const Range& window) {
  out << "s,Delta,gamma,delta,gamma_bar_du,R_re,R_du,rho_re,rho_du,developable\n";
  for (std::size_t i = 0; i < window.count; ++i) {
    const CurvatureData c = curvature_data(darboux_frame(curve, window.at(i)));
    const bool developable = std::fabs(c.delta_param) <= kDevelopableTolerance;
    out << g12(window.at(i)) << ',' << g12(c.delta_param) << ',' << g12(c.gamma) << ','
        << g12(c.delta) << ',' << g12(c.gamma_bar.du) << ',' << g12(c.radius.re) << ','
        << g12(c.radius.du) << ',' << g12(c.spherical_radius.re) << ','
        << g12(c.spherical_radius.du) << ',' << (developable ? "true" : "false") << '\n';
  }
}

void write_smarandache_report(std::ostream& out, const SmarandacheResult& result) {
  const bool eg = result.kind == Kind::EG;
  out << "s,regular,orientation,gamma_closed_re,gamma_closed_du,gamma_oracle_re,gamma_oracle_du,"
         "R_re,R_du,R_oracle_re,R_oracle_du,rho_re,rho_du,rho_oracle_re,rho_oracle_du";
  if (eg) out << ",theta,theta_star";
  out << '\n';
  for (const SmarandacheSample& p : result.samples) {
    out << g12(p.s) << ',' << (p.regular ? 1 : 0) << ',' << g12(p.orientation);
    for (const DualScalar& v : {p.gamma_closed, p.gamma_oracle, p.radii.radius, p.radii_oracle.radius,
                                p.radii.spherical, p.radii_oracle.spherical}) {
      out << ',' << g12(v.re) << ',' << g12(v.du);
    }
    if (eg) {
      const DualAngle a = dual_angle(p.base.e, p.point);
      out << ',' << g12(a.theta) << ',' << g12(a.theta_star);
    }
    out << '\n';
  }
}

void write_obj(std::ostream& out, const RuledPatch& patch, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const auto& row : patch.vertices) {
    for (const Vec3& v : row) {
      out << "v " << fmt("%.9f", v.x) << ' ' << fmt("%.9f", v.y) << ' ' << fmt("%.9f", v.z) << '\n';
    }
  }
  const std::size_t nu = patch.cols();
  for (std::size_t i = 0; i + 1 < patch.rows(); ++i) {
    for (std::size_t j = 0; j + 1 < nu; ++j) {
      const std::size_t a = i * nu + j + 1, b = a + nu, c = b + 1, d = a + 1;
      out << "f " << a << ' ' << b << ' ' << c << '\n';
      out << "f " << a << ' ' << c << ' ' << d << '\n';
    }
  }
}

}  // namespace dualruled
