#include "dualruled/smarandache.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dualruled/oracle.hpp"
#include "dualruled/stencil.hpp"
#include "dualruled/study_map.hpp"

namespace dualruled {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

DualVec3 combine(const DualScalar& a, const DualScalar& b, const DualScalar& c, const DarbouxFrame& f) {
  return a * f.e + b * f.t + c * f.g;
}

void check_pole(const DualScalar& g) {
  if (std::abs(1.0 - g.re) < kPoleTolerance) {
    throw Error(ErrorCode::DegenerateSpeed, "ẽg̃ curve is singular at γ = 1");
  }
}

DualScalar rsqrt(const DualScalar& x) { return pow(x, Rational{-1, 2}); }
DualScalar pow32(const DualScalar& x) { return pow(x, Rational{3, 2}); }

}  // namespace

const char* to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::ET: return "ET";
    case Kind::EG: return "EG";
    case Kind::TG: return "TG";
    case Kind::ETG: return "ETG";
  }
  return "?";
}

Kind parse_kind(std::string_view text) {
  std::string up(text);
  for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Kind k : kAllKinds) {
    if (up == to_string(k)) return k;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown Smarandache kind '" + std::string(text) + "'");
}

Vec3 kind_weights(Kind kind) {
  const double a = 1.0 / kSqrt2;
  const double b = 1.0 / kSqrt3;
  switch (kind) {
    case Kind::ET: return {a, a, 0.0};
    case Kind::EG: return {a, 0.0, a};
    case Kind::TG: return {0.0, a, a};
    case Kind::ETG: return {b, b, b};
  }
  return {};
}

DualVec3 smarandache_point(Kind kind, const DarbouxFrame& base) {
  const Vec3 w = kind_weights(kind);
  return combine(w.x, w.y, w.z, base);
}

bool regularity(Kind kind, const DualScalar& gamma_bar) {
  return kind != Kind::EG || std::abs(1.0 - gamma_bar.re) > kPoleTolerance;
}

double orientation(Kind kind, const DualScalar& gamma_bar) {
  return (kind == Kind::EG && gamma_bar.re > 1.0) ? -1.0 : 1.0;
}

DualMat3 transformed_frame(Kind kind, const DualScalar& g) {
  const double a = 1.0 / kSqrt2;
  switch (kind) {
    case Kind::ET: {
      const DualScalar n1 = rsqrt(2.0 + g * g);
      const DualScalar n2 = rsqrt(4.0 + 2.0 * g * g);
      return {DualVec3{a, a, 0.0}, DualVec3{-n1, n1, g * n1},
              DualVec3{g * n2, -g * n2, kSqrt2 * n1}};
    }
    case Kind::EG:
      check_pole(g);
      return {DualVec3{a, 0.0, a}, DualVec3{0.0, 1.0, 0.0}, DualVec3{-a, 0.0, a}};
    case Kind::TG: {
      const DualScalar n1 = rsqrt(1.0 + 2.0 * g * g);
      const DualScalar n2 = rsqrt(2.0 + 4.0 * g * g);
      return {DualVec3{0.0, a, a}, DualVec3{-n1, -g * n1, g * n1},
              DualVec3{2.0 * g * n2, -n2, n2}};
    }
    case Kind::ETG: {
      const double b = 1.0 / kSqrt3;
      const DualScalar q = g * g - g + 1.0;
      const DualScalar n1 = rsqrt(2.0 * q);
      const DualScalar n2 = rsqrt(q) / kSqrt6;
      return {DualVec3{b, b, b}, DualVec3{-n1, (1.0 - g) * n1, g * n1},
              DualVec3{(2.0 * g - 1.0) * n2, -(g + 1.0) * n2, (2.0 - g) * n2}};
    }
  }
  return DualMat3::identity();
}

DualScalar closed_form_curvature(Kind kind, const DualScalar& g, const DualScalar& gp) {
  switch (kind) {
    case Kind::ET:
      return (g * g * g + 2.0 * gp + 2.0 * g) / pow32(2.0 + g * g);
    case Kind::EG:
      check_pole(g);
      return (1.0 + g) / (1.0 - g);
    case Kind::TG:
      return (4.0 * kSqrt2 * g * gp + 4.0 * kSqrt2 * g * g + 2.0 * kSqrt2) / pow32(2.0 + 4.0 * g * g);
    case Kind::ETG:
      return (3.0 * gp + 2.0 * g * g * g + 2.0) / (2.0 * kSqrt2 * pow32(g * g - g + 1.0));
  }
  return {};
}

DualScalar tg_curvature_rederived(const DualScalar& g, const DualScalar& gp) {
  const DualScalar w = 1.0 + 2.0 * g * g;
  return (w + 2.0 * gp) / pow32(w);
}

DualVec3 darboux_vector_closed(Kind kind, const DualScalar& g, const DualScalar& gp, const DarbouxFrame& f) {
  switch (kind) {
    case Kind::ET: {
      const DualScalar k = 1.0 / (kSqrt2 * pow32(2.0 + g * g));
      return combine(k * (2.0 * g * g * g + 2.0 * gp + 4.0 * g), k * (2.0 * gp), k * (2.0 * g * g + 4.0), f);
    }
    case Kind::EG: {
      check_pole(g);
      const DualScalar k = kSqrt2 / (1.0 - g);
      return combine(k * g, 0.0, k, f);
    }
    case Kind::TG: {
      const DualScalar w = 2.0 + 4.0 * g * g;
      const DualScalar w32 = pow32(w);
      return combine(2.0 * g * rsqrt(w), 4.0 * g * gp / w32, (4.0 * g * gp + 8.0 * g * g + 4.0) / w32, f);
    }
    case Kind::ETG: {
      const DualScalar k = 1.0 / (2.0 * kSqrt6 * pow32(g * g - g + 1.0));
      return combine(k * (3.0 * g + 6.0 * g * g * g - 6.0 * g * g + 6.0 * g), k * (3.0 * g),
                     k * (3.0 * g + 6.0 * g * g - 6.0 * g + 6.0), f);
    }
  }
  return {};
}

Radii derived_radii(Kind kind, const DualScalar& g, const DualScalar& gp) {
  Radii r;
  curvature_radii(closed_form_curvature(kind, g, gp), r.radius, r.spherical);
  return r;
}

Radii printed_radii(Kind kind, const DualScalar& g, const DualScalar& gp) {
  Radii r;
  switch (kind) {
    case Kind::ET: {
      const DualScalar g2 = g * g;
      const DualScalar g3 = g2 * g;
      const DualScalar rad = 2.0 * g3 * g3 + 14.0 * g2 * g2 + 12.0 * g2 + 4.0 * g3 * gp + 8.0 * g * gp + 4.0 * gp * gp;
      r.radius = pow32(2.0 + g2) / sqrt(rad);
      break;
    }
    case Kind::EG:
      check_pole(g);
      r.radius = (1.0 - g) / sqrt(2.0 * g * g + 2.0);
      r.spherical = {std::asin(r.radius.re), std::numeric_limits<double>::quiet_NaN()};
      return r;
    case Kind::TG: {
      const DualScalar w = 2.0 + 4.0 * g * g;
      const DualScalar num = 4.0 * kSqrt2 * g * gp + 4.0 * kSqrt2 * g * g + 2.0 * kSqrt2;
      r.radius = pow32(w) / sqrt(w * w * w + num * num);
      break;
    }
    case Kind::ETG: {
      const DualScalar q = g * g - g + 1.0;
      const DualScalar num = 3.0 * g + 2.0 * g * g * g + 2.0;
      r.radius = 2.0 * kSqrt2 * pow32(q) / sqrt(8.0 * q * q * q + num * num);
      break;
    }
  }
  r.spherical = asin(r.radius);
  return r;
}

DualMat3 printed_frame_derivative(Kind kind, const DualScalar& g, const DualScalar& gp) {
  if (kind == Kind::EG) {
    check_pole(g);
    const DualScalar k = 1.0 / (1.0 - g);
    return {DualVec3{0.0, 1.0, 0.0}, DualVec3{-kSqrt2, 0.0, kSqrt2 * g * k},
            DualVec3{0.0, -(1.0 + g) * k, 0.0}};
  }
  if (kind == Kind::ETG) {
    const DualScalar q2 = 2.0 * g * g - 2.0 * g + 2.0;
    const DualScalar q = g * g - g + 1.0;
    const DualScalar n = rsqrt(q2);
    const DualScalar q2sq = q2 * q2;
    const DualScalar q2cu = q2sq * q2;
    const DualScalar w = 2.0 * g * gp - g;
    const DualScalar r1c0 = (kSqrt3 * g * (2.0 * g - 1.0) + kSqrt3 * (g - 1.0) * q2sq) / q2cu;
    const DualScalar r1c1 = (-kSqrt3 * (g + g * g) * q2sq - kSqrt3 * (g - 1.0) * w) / q2cu;
    const DualScalar r1c2 = (kSqrt3 * (g + g - g * g) * q2sq - kSqrt3 * g * (2.0 * g * g - g)) / q2cu;
    const DualScalar d = 4.0 * q * q;
    const DualScalar r2c0 = ((4.0 * g + 2.0 * g + 2.0) * q - (2.0 * g - 1.0) * w) / d;
    const DualScalar r2c1 = ((-2.0 * g + 2.0 * g * g - 2.0) * q + (g + 1.0) * w) / d;
    const DualScalar r2c2 = ((-2.0 * g - 2.0 * g * g - 2.0) * q + (g - 2.0) * w) / d;
    return {DualVec3{-n, (1.0 - g) * n, g * n}, DualVec3{r1c0, r1c1, r1c2}, DualVec3{r2c0, r2c1, r2c2}};
  }
  throw Error(ErrorCode::InvalidArgument, "no transcribed derivative matrix for this kind");
}

double developability_condition(Kind kind, const CurvatureData& base, const DualScalar& slope,
                                double delta_i, bool variant) {
  if (std::abs(base.delta_param) > kDevelopableTolerance) {
    throw Error(ErrorCode::HypothesisNotMet, "base ruled surface is not developable");
  }
  const double g = base.gamma;
  const double d = base.delta;
  const double gp = slope.re;
  const double dp = slope.du;
  switch (kind) {
    case Kind::ET: {
      const double w = 2.0 + g * g;
      const double rhs = (3.0 * d * g * g + 2.0 * d + 2.0 * dp) / std::pow(w, 1.5) -
                         3.0 * d * g * (g * g * g + 2.0 * gp + 2.0 * g) / std::pow(w, 2.5);
      return delta_i - rhs;
    }
    case Kind::EG:
      return (1.0 - g * g) * delta_i - 2.0 * d;
    case Kind::TG: {
      const double w = variant ? 2.0 + 4.0 * g * g : 2.0 + g * g;
      const double rhs = (4.0 * kSqrt2 * d * gp + 4.0 * kSqrt2 * g * dp + 8.0 * kSqrt2 * d * g) / std::pow(w, 1.5) +
                         12.0 * d * g * (4.0 * kSqrt2 * g * gp + 4.0 * kSqrt2 * g * g + 2.0 * kSqrt2) /
                             std::pow(w, 2.5);
      return delta_i - rhs;
    }
    case Kind::ETG: {
      const double q = g * g - g + 1.0;
      const double rhs = (6.0 * g * g * d + 3.0 * dp) / (2.0 * kSqrt2 * std::pow(q, 1.5)) -
                         3.0 * d * (2.0 * g - 1.0) * (3.0 * gp + 2.0 * g * g * g + 2.0) /
                             (4.0 * kSqrt2 * std::pow(q, 2.5));
      return delta_i - rhs;
    }
  }
  return 0.0;
}

double developability_prediction(Kind kind, const CurvatureData& base, const DualScalar& slope, bool variant) {
  const double r0 = developability_condition(kind, base, slope, 0.0, variant);
  if (kind != Kind::EG) return -r0;
  const double lead = 1.0 - base.gamma * base.gamma;
  if (std::abs(lead) < kPoleTolerance) {
    throw Error(ErrorCode::DegenerateSpeed, "ẽg̃ developability condition degenerates at γ² = 1");
  }
  return -r0 / lead;
}

DualAngle bertrand_offset_params(const CurveSpec& base, double s) {
  const DarbouxFrame f = darboux_frame(base, s);
  if (!regularity(Kind::EG, f.gamma_bar)) {
    throw Error(ErrorCode::DegenerateSpeed, "ẽg̃ curve is singular at γ = 1");
  }
  return dual_angle(f.e, smarandache_point(Kind::EG, f));
}

DualScalar oracle_curvature(Kind kind, const CurveSpec& base, double s) {
  constexpr int half = 8;
  constexpr double h = 5e-3;
  const Interval d = base.domain();
  double lo = s - half * h;
  lo = std::clamp(lo, d.lo, d.hi - 2 * half * h);
  const int center = static_cast<int>(std::lround((s - lo) / h));
  lo = s - center * h;
  std::vector<DualVec3> pts(2 * half + 1);
  for (int i = 0; i <= 2 * half; ++i) {
    pts[i] = smarandache_point(kind, darboux_frame(base, std::clamp(lo + i * h, d.lo, d.hi)));
  }
  const OracleFrames of = recompute_frame(pts, lo, h);
  if (!of.regular[center]) throw Error(ErrorCode::DegenerateSpeed, "derived curve is singular at s");
  return of.frames[center].gamma_bar;
}

namespace {

DualMat3 express_in(const DualVec3 (&rows)[3], const DarbouxFrame& f) {
  DualMat3 m;
  for (int r = 0; r < 3; ++r) {
    m(r, 0) = dot(rows[r], f.e);
    m(r, 1) = dot(rows[r], f.t);
    m(r, 2) = dot(rows[r], f.g);
  }
  return m;
}

}  // namespace

SmarandacheResult analyze(Kind kind, const CurveSpec& base, const Range& window) {
  if (window.count < 2 || !(window.hi > window.lo)) {
    throw Error(ErrorCode::InvalidArgument, "analysis window must be nonempty with at least 2 samples");
  }
  const Interval dom = base.domain();
  if (!dom.contains(window.lo) || !dom.contains(window.hi)) {
    throw Error(ErrorCode::OutOfDomain, "analysis window exceeds the curve domain");
  }
  const std::size_t stride = (kOracleNodes - 1 + window.count - 2) / (window.count - 1);
  const double h = window.step() / static_cast<double>(stride);
  constexpr std::size_t kPad = 8;
  const std::size_t pad_lo = std::min<std::size_t>(kPad, static_cast<std::size_t>((window.lo - dom.lo) / h));
  const std::size_t pad_hi = std::min<std::size_t>(kPad, static_cast<std::size_t>((dom.hi - window.hi) / h));
  const std::size_t inner = (window.count - 1) * stride + 1;
  const std::size_t n = pad_lo + inner + pad_hi;
  const double u0 = window.lo - static_cast<double>(pad_lo) * h;

  std::vector<DarbouxFrame> frames(n);
  std::vector<DualVec3> pts(n);
  std::vector<double> u(n);
  std::vector<Vec3> re(n), du(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = std::clamp(u0 + h * static_cast<double>(i), dom.lo, dom.hi);
    frames[i] = darboux_frame(base, u[i]);
    pts[i] = smarandache_point(kind, frames[i]);
    re[i] = pts[i].real();
    du[i] = pts[i].dual();
  }

  SmarandacheResult result;
  result.kind = kind;
  result.curve = CurveSpec::sampled(std::string(to_string(kind)) + ":" + base.name(), u, re, du);
  result.grid = u;
  result.grid_points = pts;

  const OracleFrames of = recompute_frame(pts, u0, h);
  std::vector<DualVec3> rows[3];
  for (auto& r : rows) r.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[0][i] = of.frames[i].e;
    rows[1][i] = of.frames[i].t;
    rows[2][i] = of.frames[i].g;
  }
  std::vector<DualVec3> drows[3];
  for (int r = 0; r < 3; ++r) drows[r] = stencil_d1(rows[r], h);

  result.samples.resize(window.count);
  for (std::size_t k = 0; k < window.count; ++k) {
    const std::size_t i = pad_lo + k * stride;
    SmarandacheSample& out = result.samples[k];
    out.s = window.at(k);
    out.base = frames[i];
    out.base_curvature = curvature_data(frames[i]);
    out.slope = curvature_slope(base, u[i]);
    out.point = pts[i];
    out.oracle = of.frames[i];
    const DualScalar g = frames[i].gamma_bar;
    out.orientation = orientation(kind, g);
    out.regular = of.regular[i] && regularity(kind, g);
    if (!out.regular) continue;

    out.frame_matrix = transformed_frame(kind, g);
    out.gamma_closed = closed_form_curvature(kind, g, out.slope);
    out.gamma_oracle = out.oracle.gamma_bar;
    out.d_closed = darboux_vector_closed(kind, g, out.slope, frames[i]);
    out.d_oracle = out.gamma_oracle * out.oracle.e + out.oracle.g;
    out.radii = derived_radii(kind, g, out.slope);
    curvature_radii(out.gamma_oracle, out.radii_oracle.radius, out.radii_oracle.spherical);

    const DualVec3 d[3] = {drows[0][i] / of.rate[i], drows[1][i] / of.rate[i], drows[2][i] / of.rate[i]};
    out.oracle_derivative = express_in(d, frames[i]);
  }
  return result;
}

RuledPatch sample_smarandache_surface(Kind kind, const CurveSpec& base, const Range& s, const Range& u) {
  return sample_ruled_surface(
      [&](double x) {
        const DarbouxFrame f = darboux_frame(base, x);
        return Line3{central_point(f), smarandache_point(kind, f).real()};
      },
      s, u);
}

}  // namespace dualruled
