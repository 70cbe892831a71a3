#include "dualruled/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cubic_spline.hpp"
#include "dualruled/stencil.hpp"

namespace dualruled {

namespace detail {

class CurveSource {
 public:
  CurveSource(std::string name, Interval domain, double origin, bool sampled)
      : name_(std::move(name)), domain_(domain), origin_(origin), sampled_(sampled) {}
  virtual ~CurveSource() = default;

  virtual RawDerivatives eval(double u) const = 0;

  const std::string& name() const { return name_; }
  Interval domain() const { return domain_; }
  double origin() const { return origin_; }
  bool sampled() const { return sampled_; }

 private:
  std::string name_;
  Interval domain_;
  double origin_;
  bool sampled_;
};

namespace {

class AnalyticSource final : public CurveSource {
 public:
  AnalyticSource(std::string name, Interval domain, double origin, CurveSpec::JetFn fn)
      : CurveSource(std::move(name), domain, origin, false), fn_(std::move(fn)) {}

  RawDerivatives eval(double u) const override {
    JetVec3 e, es;
    fn_(Jet3::variable(u), e, es);
    RawDerivatives out;
    DualVec3* slots[4] = {&out.value, &out.d1, &out.d2, &out.d3};
    for (int k = 0; k < 4; ++k) {
      *slots[k] = DualVec3(Vec3{e.x.derivative(k), e.y.derivative(k), e.z.derivative(k)},
                           Vec3{es.x.derivative(k), es.y.derivative(k), es.z.derivative(k)});
    }
    return out;
  }

 private:
  CurveSpec::JetFn fn_;
};

class SampledSource final : public CurveSource {
 public:
  SampledSource(std::string name, double u0, double h, std::size_t n,
                std::array<CubicSpline, 6> splines)
      : CurveSource(std::move(name), {u0, u0 + h * static_cast<double>(n - 1)}, u0, true),
        splines_(std::move(splines)) {}

  // The spline leaves the sphere between nodes; project back so every
  // evaluation is a dual unit vector, carrying the derivatives along.
  RawDerivatives eval(double u) const override {
    Jet3 c[6];
    for (int i = 0; i < 6; ++i) {
      double d[4];
      splines_[i].eval(u, d);
      c[i].c = {d[0], d[1], d[2] / 2.0, d[3] / 6.0};
    }
    const JetVec3 raw{c[0], c[1], c[2]};
    const Jet3 r = pow(dot(raw, raw), -0.5);
    const JetVec3 e = r * raw;
    const JetVec3 w = r * JetVec3{c[3], c[4], c[5]};
    const JetVec3 es = w - dot(e, w) * e;
    RawDerivatives out;
    DualVec3* slots[4] = {&out.value, &out.d1, &out.d2, &out.d3};
    for (int k = 0; k < 4; ++k) {
      *slots[k] = DualVec3(Vec3{e.x.derivative(k), e.y.derivative(k), e.z.derivative(k)},
                           Vec3{es.x.derivative(k), es.y.derivative(k), es.z.derivative(k)});
    }
    return out;
  }

 private:
  std::array<CubicSpline, 6> splines_;
};

DualScalar dual_speed(const CurveSource& src, double u) {
  const DualVec3 d1 = src.eval(u).d1;
  const double sigma = norm(d1.real());
  if (!(sigma > kRegularSpeed)) {
    throw Error(ErrorCode::SingularIndicatrix,
                "real indicatrix stalls at u = " + std::to_string(u));
  }
  return norm(d1);
}

}  // namespace

/// Cumulative dual arc length ∫‖ẽ_u‖ du on a uniform raw grid.
class ArcLengthMap {
 public:
  static constexpr std::size_t kIntervals = 4096;

  explicit ArcLengthMap(const CurveSource& src) {
    const Interval d = src.domain();
    lo_ = d.lo;
    h_ = d.length() / static_cast<double>(kIntervals);
    speed_.resize(kIntervals + 1);
    cum_.resize(kIntervals + 1);
    bool unit = true;
    for (std::size_t k = 0; k <= kIntervals; ++k) {
      speed_[k] = dual_speed(src, node(k));
      unit = unit && std::abs(speed_[k].re - 1.0) <= 1e-12;
    }
    cum_[0] = DualScalar{};
    for (std::size_t k = 0; k < kIntervals; ++k) {
      const DualScalar mid = dual_speed(src, node(k) + 0.5 * h_);
      unit = unit && std::abs(mid.re - 1.0) <= 1e-12;
      cum_[k + 1] = cum_[k] + (h_ / 6.0) * (speed_[k] + 4.0 * mid + speed_[k + 1]);
    }
    identity_ = unit;
    origin_u_ = src.origin();
    origin_ = cumulative(src, origin_u_);
    s_domain_ = {cum_.front().re - origin_.re, cum_.back().re - origin_.re};
    if (identity_) s_domain_ = {d.lo - origin_u_, d.hi - origin_u_};
  }

  Interval domain() const { return s_domain_; }

  double parameter(const CurveSource& src, double s) const {
    constexpr double slack = 1e-12;
    if (s < s_domain_.lo - slack || s > s_domain_.hi + slack) {
      throw Error(ErrorCode::OutOfDomain, "arc length " + std::to_string(s) + " outside curve domain");
    }
    if (identity_) return origin_u_ + s;
    const double target = s + origin_.re;
    auto it = std::upper_bound(cum_.begin(), cum_.end(), target,
                               [](double v, const DualScalar& c) { return v < c.re; });
    std::size_t k = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - cum_.begin()) - 1));
    k = std::min(k, kIntervals - 1);
    const double span = cum_[k + 1].re - cum_[k].re;
    double u = node(k) + h_ * (target - cum_[k].re) / span;
    for (int iter = 0; iter < 12; ++iter) {
      const double f = cum_[k].re + partial(src, k, u).re - target;
      const double step = f / norm(src.eval(u).d1.real());
      u -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(u))) break;
    }
    return u;
  }

  DualScalar dual_arclength(const CurveSource& src, double u) const {
    return cumulative(src, u) - origin_;
  }

 private:
  double node(std::size_t k) const { return lo_ + h_ * static_cast<double>(k); }

  std::size_t cell(double u) const {
    const double pos = std::floor((u - lo_) / h_);
    return static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(kIntervals - 1)));
  }

  /// Simpson on [node(k), u].
  DualScalar partial(const CurveSource& src, std::size_t k, double u) const {
    const double a = node(k);
    if (u == a) return {};
    return ((u - a) / 6.0) * (speed_[k] + 4.0 * dual_speed(src, 0.5 * (a + u)) + dual_speed(src, u));
  }

  DualScalar cumulative(const CurveSource& src, double u) const {
    const std::size_t k = cell(u);
    return cum_[k] + partial(src, k, u);
  }

  double lo_ = 0.0;
  double h_ = 0.0;
  std::vector<DualScalar> speed_;
  std::vector<DualScalar> cum_;
  bool identity_ = false;
  double origin_u_ = 0.0;
  DualScalar origin_;
  Interval s_domain_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// CurveSpec

CurveSpec CurveSpec::analytic(std::string name, Interval raw_domain, double origin, JetFn fn) {
  if (!(raw_domain.hi > raw_domain.lo) || !raw_domain.contains(origin)) {
    throw Error(ErrorCode::InvalidArgument, "analytic curve needs a nonempty domain containing its origin");
  }
  CurveSpec spec;
  spec.source_ = std::make_shared<detail::AnalyticSource>(std::move(name), raw_domain, origin, std::move(fn));
  return spec;
}

CurveSpec CurveSpec::sampled(std::string name, std::vector<double> u, std::vector<Vec3> e,
                             std::vector<Vec3> e_star) {
  const std::size_t n = u.size();
  if (n < static_cast<std::size_t>(kMinSampledPoints)) {
    throw Error(ErrorCode::InvalidCurve, "sampled curve needs at least 64 points, got " + std::to_string(n));
  }
  if (e.size() != n || e_star.size() != n) {
    throw Error(ErrorCode::InvalidCurve, "sampled curve columns have different lengths");
  }
  const double h = (u.back() - u.front()) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidCurve, "sampled curve parameter must increase");
  for (std::size_t i = 0; i < n; ++i) {
    const double expected = u.front() + h * static_cast<double>(i);
    if (std::abs(u[i] - expected) > 1e-9 * std::max(1.0, std::abs(expected)) + 1e-6 * h) {
      throw Error(ErrorCode::InvalidCurve, "sampled curve parameter is not uniformly spaced");
    }
    if (std::abs(dot(e[i], e[i]) - 1.0) > kUnitSphereTolerance ||
        std::abs(dot(e[i], e_star[i])) > kUnitSphereTolerance) {
      throw Error(ErrorCode::InvalidCurve,
                  "sample " + std::to_string(i) + " is not on the dual unit sphere");
    }
  }
  std::array<detail::CubicSpline, 6> splines;
  for (int c = 0; c < 6; ++c) {
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3& v = c < 3 ? e[i] : e_star[i];
      col[i] = (c % 3 == 0) ? v.x : (c % 3 == 1 ? v.y : v.z);
    }
    splines[c] = detail::CubicSpline(u.front(), h, std::move(col));
  }
  CurveSpec spec;
  spec.source_ = std::make_shared<detail::SampledSource>(std::move(name), u.front(), h, n, std::move(splines));
  return spec;
}

namespace {

constexpr double kPresetHalfSpan = 4.0 * std::numbers::pi;

}  // namespace

CurveSpec CurveSpec::helicoid(double pitch) {
  return analytic("helicoid", {-kPresetHalfSpan, kPresetHalfSpan}, 0.0,
                  [pitch](const Jet3& u, JetVec3& e, JetVec3& es) {
                    Jet3 s, c;
                    sincos(u, s, c);
                    e = {c, s, Jet3(0.0)};
                    es = {-pitch * (u * s), pitch * (u * c), Jet3(0.0)};
                  });
}

CurveSpec CurveSpec::cone(double r, double h) {
  if (!(r > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::InvalidArgument, "cone needs r > 0 and finite h");
  }
  const double n = std::hypot(r, h);
  const double rr = r / n;
  const double hh = h / n;
  return analytic("cone", {-kPresetHalfSpan, kPresetHalfSpan}, 0.0,
                  [rr, hh](const Jet3& u, JetVec3& e, JetVec3& es) {
                    Jet3 s, c;
                    sincos(u, s, c);
                    e = {rr * c, rr * s, Jet3(hh)};
                    es = {Jet3(0.0), Jet3(0.0), Jet3(0.0)};
                  });
}

CurveSpec CurveSpec::latitude_drift(const LatitudeDriftParams& p) {
  return analytic("latitude-drift", {-kPresetHalfSpan, kPresetHalfSpan}, 0.0,
                  [p](const Jet3& u, JetVec3& e, JetVec3& es) {
                    Jet3 su, cu, sl, cl;
                    sincos(u, su, cu);
                    sincos(Jet3(p.base_latitude) + p.amplitude * su, sl, cl);
                    e = {cl * cu, cl * su, sl};
                    const JetVec3 arm{p.offset * cu, p.offset * su, p.pitch * u};
                    es = cross(arm, e);
                  });
}

CurveSpec CurveSpec::tangent_developable(double latitude, double k) {
  const double cl = std::cos(latitude);
  const double sl = std::sin(latitude);
  return analytic("tangent-developable", {-kPresetHalfSpan, kPresetHalfSpan}, 0.0,
                  [cl, sl, k](const Jet3& u, JetVec3& e, JetVec3& es) {
                    Jet3 su, cu;
                    sincos(u, su, cu);
                    e = {cl * cu, cl * su, Jet3(sl)};
                    // c = ∫₀ᵘ (1 + k sin v) e(v) dv
                    const JetVec3 c{cl * (su + 0.5 * k * (su * su)),
                                    cl * (Jet3(1.0) - cu + k * (0.5 * u - 0.5 * (su * cu))),
                                    sl * (u + k * (Jet3(1.0) - cu))};
                    es = cross(c, e);
                  });
}

const std::string& CurveSpec::name() const { return source_->name(); }
bool CurveSpec::is_sampled() const { return source_->sampled(); }
Interval CurveSpec::raw_domain() const { return source_->domain(); }
double CurveSpec::origin() const { return source_->origin(); }

RawDerivatives CurveSpec::raw(double u) const {
  if (!source_->domain().contains(u)) {
    throw Error(ErrorCode::OutOfDomain, "raw parameter " + std::to_string(u) + " outside curve domain");
  }
  return source_->eval(u);
}

Interval CurveSpec::domain() const {
  if (!arclength_) throw Error(ErrorCode::InvalidArgument, "curve is not arc-length parametrized");
  return arclength_->domain();
}

double CurveSpec::parameter_at(double s) const {
  if (!arclength_) throw Error(ErrorCode::InvalidArgument, "curve is not arc-length parametrized");
  const Interval d = source_->domain();
  return std::clamp(arclength_->parameter(*source_, s), d.lo, d.hi);
}

DualVec3 CurveSpec::at(double s) const { return source_->eval(parameter_at(s)).value; }

DualScalar CurveSpec::dual_arclength_at(double s) const {
  return arclength_->dual_arclength(*source_, parameter_at(s));
}

CurveSpec reparametrize_arclength(const CurveSpec& raw) {
  CurveSpec out = raw;
  out.arclength_ = std::make_shared<detail::ArcLengthMap>(*raw.source_);
  return out;
}

CurveSpec make_preset(const std::string& name, const std::vector<double>& params) {
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw Error(ErrorCode::InvalidArgument, "wrong number of parameters for preset '" + name + "'");
    }
  };
  if (name == "helicoid") {
    want(0, 1);
    return reparametrize_arclength(CurveSpec::helicoid(params.empty() ? 1.0 : params[0]));
  }
  if (name == "cone") {
    want(2, 2);
    return reparametrize_arclength(CurveSpec::cone(params[0], params[1]));
  }
  if (name == "latitude-drift") {
    if (params.size() != 0 && params.size() != 4) want(4, 4);
    LatitudeDriftParams p;
    if (params.size() == 4) p = {params[0], params[1], params[2], params[3]};
    return reparametrize_arclength(CurveSpec::latitude_drift(p));
  }
  if (name == "tangent-developable") {
    if (params.size() != 0 && params.size() != 2) want(2, 2);
    return reparametrize_arclength(params.empty() ? CurveSpec::tangent_developable()
                                                  : CurveSpec::tangent_developable(params[0], params[1]));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown preset '" + name + "'");
}

Range default_window(const CurveSpec& curve) {
  const Interval d = curve.domain();
  if (curve.is_sampled()) return {d.lo, d.hi, 64};
  // One turn of the preset, starting clear of the u = 0 moment degeneracy.
  auto s_of = [&](double u) {
    double lo = d.lo, hi = d.hi;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (curve.parameter_at(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  return {s_of(0.5), s_of(2.0 * std::numbers::pi), 64};
}

// ---------------------------------------------------------------------------
// Frame machinery

DualVec3 derivatives(const CurveSpec& curve, double s, int order) {
  if (order < 1 || order > 3) throw Error(ErrorCode::InvalidArgument, "derivative order must be 1..3");
  const Interval d = curve.domain();
  if (!d.contains(s)) throw Error(ErrorCode::OutOfDomain, "s outside curve domain");
  const double h = kDerivativeSteps[order - 1];
  if (order == 1) return stencil_first([&](double x) { return curve.at(x); }, s, h, d);
  return stencil_first([&](double x) { return derivatives(curve, x, order - 1); }, s, h, d);
}

DarbouxFrame frame_from_derivatives(const DualVec3& value, const DualVec3& d1, const DualVec3& d2) {
  const double sigma = norm(d1.real());
  if (!(sigma > kRegularSpeed)) {
    throw Error(ErrorCode::SingularIndicatrix, "real indicatrix is singular at this point");
  }
  const DualScalar speed = norm(d1);  // ‖ẽ_u‖ = σ(1 + εΔ)
  DarbouxFrame f;
  f.e = value;
  f.t = d1 / speed;
  f.g = cross(f.e, f.t);
  f.delta_param = speed.du / speed.re;
  f.speed = {1.0, f.delta_param};

  const DualScalar speed_u = dot(d1, d2) / speed;
  const DualVec3 t_u = d2 / speed - d1 * (speed_u / (speed * speed));
  const DualVec3 g_u = cross(d1, f.t) + cross(value, t_u);
  f.gamma_bar = -dot(g_u / speed, f.t);
  return f;
}

namespace {

DarbouxFrame frame_core(const CurveSpec& curve, double s) {
  const RawDerivatives raw = curve.raw(curve.parameter_at(s));
  DarbouxFrame f = frame_from_derivatives(raw.value, raw.d1, raw.d2);
  f.s = s;
  return f;
}

}  // namespace

DarbouxFrame darboux_frame(const CurveSpec& curve, double s) {
  DarbouxFrame f = frame_core(curve, s);
  f.s_bar = curve.dual_arclength_at(s);
  return f;
}

double distribution_parameter(const CurveSpec& curve, double s) {
  return frame_core(curve, s).delta_param;
}

DualScalar dual_arclength(const CurveSpec& curve, double s) {
  if (s < 0.0) throw Error(ErrorCode::OutOfDomain, "dual arc length is measured from s = 0");
  if (!curve.domain().contains(s)) throw Error(ErrorCode::OutOfDomain, "s outside curve domain");
  return curve.dual_arclength_at(s);
}

DualScalar curvature_slope(const CurveSpec& curve, double s) {
  const DualScalar d_ds = stencil_first([&](double x) { return frame_core(curve, x).gamma_bar; }, s,
                                        kCurvatureSlopeStep, curve.domain());
  return d_ds / frame_core(curve, s).speed;
}

void curvature_radii(const DualScalar& gamma_bar, DualScalar& radius, DualScalar& spherical_radius) {
  radius = pow(1.0 + gamma_bar * gamma_bar, Rational{-1, 2});
  spherical_radius = std::numbers::pi / 2 - atan(gamma_bar);
}

CurvatureData curvature_data(const DarbouxFrame& frame) {
  CurvatureData c;
  c.gamma_bar = frame.gamma_bar;
  c.gamma = frame.gamma_bar.re;
  c.delta_param = frame.delta_param;
  c.delta = frame.gamma_bar.du + c.gamma * frame.delta_param;
  curvature_radii(frame.gamma_bar, c.radius, c.spherical_radius);
  c.darboux = frame.gamma_bar * frame.e + frame.g;
  c.darboux_unit = c.darboux * c.radius;
  return c;
}

Vec3 central_point(const DarbouxFrame& f) {
  return 0.5 * (cross(f.e.real(), f.e.dual()) + cross(f.t.real(), f.t.dual()) +
                cross(f.g.real(), f.g.dual()));
}

}  // namespace dualruled
