#include "dualruled/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "dualruled/smarandache.hpp"

namespace dualruled {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Claim {
  Claim(std::string id_, std::string location_, Gate gate_, double tol_re_, double tol_du_)
      : id(std::move(id_)), location(std::move(location_)), gate(gate_), tol_re(tol_re_), tol_du(tol_du_) {}

  std::string id;
  std::string location;
  Gate gate = Gate::Advisory;
  double tol_re = 0.0;
  double tol_du = 0.0;
  std::vector<DualScalar> closed;
  std::vector<DualScalar> oracle;
  Verdict forced = Verdict::Verified;
  bool has_forced = false;

  void add(const DualScalar& c, const DualScalar& o) {
    closed.push_back(c);
    oracle.push_back(o);
  }
  void add(const DualVec3& c, const DualVec3& o) {
    for (int k = 0; k < 3; ++k) add(c[k], o[k]);
  }
  void add(const DualMat3& c, const DualMat3& o) {
    for (int r = 0; r < 3; ++r) add(c.row(r), o.row(r));
  }
  void force(Verdict v) {
    forced = v;
    has_forced = true;
  }

  LedgerRow finish() const {
    LedgerRow row;
    row.location = location;
    row.gate = gate;
    row.tol_re = tol_re;
    row.tol_du = tol_du;
    row.report = compare(id, closed, oracle, tol_re, tol_du);
    if (has_forced) {
      row.report.verdict = forced;
      row.gate = Gate::Advisory;
    } else if (closed.empty()) {
      row.report.verdict = Verdict::HypothesisNotMet;
    }
    return row;
  }
};

template <class F>
DualScalar guarded(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    return {kNaN, kNaN};
  }
}

/// Entries of AAᵗ − I, AᵗA − I and det A − 1, split by part.
void orthogonality_parts(const DualMat3& a, DualScalar& worst) {
  const DualMat3 p = mat_mul(a, mat_transpose(a));
  const DualMat3 q = mat_mul(mat_transpose(a), a);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const double id = r == c ? 1.0 : 0.0;
      worst.re = std::max({worst.re, std::abs(p(r, c).re - id), std::abs(q(r, c).re - id)});
      worst.du = std::max({worst.du, std::abs(p(r, c).du), std::abs(q(r, c).du)});
    }
  }
  const DualScalar d = mat_det(a);
  worst.re = std::max(worst.re, std::abs(d.re - 1.0));
  worst.du = std::max(worst.du, std::abs(d.du));
}

/// ρ on the arcsin branch, π/2 − atan|γ̄|, which is what the printed forms give.
DualScalar arcsin_branch(const DualScalar& gamma_bar) {
  const DualScalar g = gamma_bar.re < 0.0 ? -gamma_bar : gamma_bar;
  return std::numbers::pi / 2 - atan(g);
}

struct KindText {
  const char* construct;
  const char* frame;
  const char* derivative;
  const char* curvature;
  const char* zero;
  double zero_value;
  const char* darboux;
  const char* developable;
  const char* radius;
  const char* spherical;
};

KindText text_for(Kind k) {
  switch (k) {
    case Kind::ET:
      return {"a1 = (e + t)/sqrt2",
              "[e1;t1;g1] = [1/sqrt2, 1/sqrt2, 0; -1/sqrt(2+gam^2), 1/sqrt(2+gam^2), gam/sqrt(2+gam^2); "
              "gam/sqrt(4+2gam^2), -gam/sqrt(4+2gam^2), sqrt2/sqrt(2+gam^2)] [e;t;g]",
              "d[e1;t1;g1]/ds1 (not transcribed)",
              "gam1 = (gam^3 + 2gam' + 2gam)/(2+gam^2)^(3/2)",
              "gam = 0 => gam1 = 0",
              0.0,
              "d1 = [(2gam^3 + 2gam' + 4gam) e + 2gam' t + (2gam^2 + 4) g]/(sqrt2 (2+gam^2)^(3/2))",
              "delta1 = (3delta gam^2 + 2delta + 2delta')/(2+gam^2)^(3/2) - "
              "3delta gam (gam^3 + 2gam' + 2gam)/(2+gam^2)^(5/2)",
              "R1 = (2+gam^2)^(3/2)/sqrt(2gam^6 + 14gam^4 + 12gam^2 + 4gam^3 gam' + 8gam gam' + 4gam'^2)",
              "rho1 = arcsin(R1 as printed)"};
    case Kind::EG:
      return {"a2 = (e + g)/sqrt2",
              "[e2;t2;g2] = [1/sqrt2, 0, 1/sqrt2; 0, 1, 0; -1/sqrt2, 0, 1/sqrt2] [e;t;g]",
              "d[e2;t2;g2]/ds2 = [0, 1, 0; -sqrt2, 0, sqrt2 gam/(1-gam); 0, -(1+gam)/(1-gam), 0] [e;t;g]",
              "gam2 = (1 + gam)/(1 - gam)",
              "gam = 0 => gam2 = 1",
              1.0,
              "d2 = sqrt2 gam/(1-gam) e + sqrt2/(1-gam) g",
              "(1 - gam^2) delta2 - 2delta = 0",
              "R2 = (1 - gam)/sqrt(2gam^2 + 2)",
              "re(rho2) = arcsin((1 - gam)/sqrt(2 + 2gam^2))"};
    case Kind::TG:
      return {"a3 = (t + g)/sqrt2",
              "[e3;t3;g3] = [0, 1/sqrt2, 1/sqrt2; -1/sqrt(1+2gam^2), -gam/sqrt(1+2gam^2), gam/sqrt(1+2gam^2); "
              "2gam/sqrt(2+4gam^2), -1/sqrt(2+4gam^2), 1/sqrt(2+4gam^2)] [e;t;g]",
              "d[e3;t3;g3]/ds3 (not transcribed)",
              "gam3 = (4sqrt2 gam gam' + 4sqrt2 gam^2 + 2sqrt2)/(2+4gam^2)^(3/2)",
              "gam = 0 => gam3 = 1",
              1.0,
              "d3 = 2gam/sqrt(2+4gam^2) e + 4gam gam'/(2+4gam^2)^(3/2) t + "
              "(4gam gam' + 8gam^2 + 4)/(2+4gam^2)^(3/2) g",
              "delta3 = (4sqrt2 delta gam' + 4sqrt2 gam delta' + 8sqrt2 delta gam)/(2+gam^2)^(3/2) + "
              "12delta gam (4sqrt2 gam gam' + 4sqrt2 gam^2 + 2sqrt2)/(2+gam^2)^(5/2)",
              "R3 = (2+4gam^2)^(3/2)/sqrt((2+4gam^2)^3 + (4sqrt2 gam gam' + 4sqrt2 gam^2 + 2sqrt2)^2)",
              "rho3 = arcsin(R3 as printed)"};
    case Kind::ETG:
      return {"a4 = (e + t + g)/sqrt3",
              "[e4;t4;g4] = [(1, 1, 1)/sqrt3; (-1, 1-gam, gam)/sqrt(2gam^2-2gam+2); "
              "(2gam-1, -(gam+1), 2-gam)/(sqrt6 sqrt(gam^2-gam+1))] [e;t;g]",
              "d[e4;t4;g4]/ds4 as printed, q = 2gam^2-2gam+2",
              "gam4 = (3gam' + 2gam^3 + 2)/(2sqrt2 (gam^2-gam+1)^(3/2))",
              "gam = 0 => gam4 = 1/sqrt2",
              1.0 / std::numbers::sqrt2,
              "d4 = [(3gam + 6gam^3 - 6gam^2 + 6gam) e + 3gam t + (3gam + 6gam^2 - 6gam + 6) g]"
              "/(2sqrt6 (gam^2-gam+1)^(3/2))",
              "delta4 = (6gam^2 delta + 3delta')/(2sqrt2 q^(3/2)) - "
              "3delta (2gam-1)(3gam' + 2gam^3 + 2)/(4sqrt2 q^(5/2)), q = gam^2-gam+1",
              "R4 = 2sqrt2 q^(3/2)/sqrt(8q^3 + (3gam + 2gam^3 + 2)^2), q = gam^2-gam+1",
              "rho4 = arcsin(R4 as printed)"};
  }
  return {};
}

std::string lower(Kind k) {
  std::string s = to_string(k);
  for (char& c : s) c = static_cast<char>(c - 'A' + 'a');
  return s;
}

void verify_kind(Kind kind, const CurveSpec& base, const Range& window, const VerifyOptions& opt,
                 std::vector<LedgerRow>& rows) {
  const KindText txt = text_for(kind);
  const std::string p = lower(kind) + ".";
  const double tr = opt.tol_re;
  const double td = opt.tol_du;
  const double ti = opt.identity_tol;

  Claim construct{p + "construct", std::string(txt.construct) + ", <a,a> = 1", Gate::Advisory, ti, ti};
  Claim frame{p + "frame-matrix", txt.frame, Gate::MustVerify, tr, td};
  Claim ortho{p + "frame-orthogonal", "A A^T = A^T A = I, det A = 1", Gate::MustVerify, ti, ti};
  Claim deriv{p + "frame-derivative", txt.derivative, Gate::Advisory, tr, td};
  Claim curv{p + "curvature", txt.curvature, Gate::MustVerify, tr, td};
  Claim zero{p + "zero-curvature", txt.zero, Gate::MustVerify, 0.0, 0.0};
  Claim darboux{p + "darboux-vector", txt.darboux, Gate::Advisory, tr, td};
  Claim dev{p + "developable", txt.developable, Gate::Advisory, tr, td};
  Claim radius{p + "radius-printed", txt.radius, Gate::Advisory, tr, td};
  Claim spherical{p + "spherical-radius-printed", txt.spherical, Gate::Advisory, tr, td};
  Claim identity{p + "radius-identity", "R sqrt(1 + gam_i^2) = 1, sin rho = R", Gate::MustVerify, ti, ti};
  Claim bertrand{"eg.bertrand-offset", "angle(e, e2) = pi/4 + eps 0", Gate::MustVerify, ti, ti};
  Claim tg_alt{"tg.curvature-rederived", "gam3 = (1 + 2gam^2 + 2gam')/(1+2gam^2)^(3/2)", Gate::Advisory, tr, td};
  Claim tg_dev_alt{"tg.developable-variant", "tg developable condition with (2+4gam^2) in place of (2+gam^2)",
                   Gate::Advisory, tr, td};
  Claim eg_dev_alt{"eg.developable-rederived", "delta2 = 2delta/(1 - gam)^2", Gate::Advisory, tr, td};

  const bool transcribed_derivative = kind == Kind::EG || kind == Kind::ETG;
  if (!transcribed_derivative) deriv.force(Verdict::OutOfScope);

  zero.add(closed_form_curvature(kind, 0.0, 0.0), txt.zero_value);

  const SmarandacheResult res = analyze(kind, base, window);
  bool developable = true;
  for (const auto& s : res.samples) developable = developable && std::abs(s.base.delta_param) <= kDevelopableTolerance;

  for (const auto& s : res.samples) {
    if (!s.regular) continue;
    const DualScalar g = s.base.gamma_bar;
    if (kind == Kind::EG && std::abs(1.0 - g.re) <= kPoleExclusion) continue;
    const double sigma = s.orientation;

    construct.add(dot(s.point, s.point), 1.0);

    const DualVec3 oracle_rows[3] = {s.oracle.e, s.oracle.t, s.oracle.g};
    for (int r = 0; r < 3; ++r) {
      const DualVec3& w = s.frame_matrix.row(r);
      const DualVec3 v = w.x * s.base.e + w.y * s.base.t + w.z * s.base.g;
      frame.add((r == 0 ? 1.0 : sigma) * v, oracle_rows[r]);
    }
    DualScalar worst;
    orthogonality_parts(s.frame_matrix, worst);
    ortho.add(worst, 0.0);

    if (transcribed_derivative) {
      DualMat3 printed = printed_frame_derivative(kind, g, s.slope);
      printed.row(0) = sigma * printed.row(0);
      deriv.add(printed, s.oracle_derivative);
    }

    curv.add(sigma * s.gamma_closed, s.gamma_oracle);
    darboux.add(sigma * s.d_closed, s.d_oracle);

    if (developable) {
      const DualScalar target = sigma * s.gamma_oracle;
      const double predicted =
          guarded([&] { return DualScalar(developability_prediction(kind, s.base_curvature, s.slope)); }).re;
      dev.add(DualScalar(0.0, predicted), DualScalar(0.0, target.du));
      if (kind == Kind::TG) {
        tg_dev_alt.add(DualScalar(0.0, developability_prediction(kind, s.base_curvature, s.slope, true)),
                       DualScalar(0.0, target.du));
      }
      if (kind == Kind::EG) {
        const double d2 = 2.0 * s.base_curvature.delta / ((1.0 - g.re) * (1.0 - g.re));
        eg_dev_alt.add(DualScalar(0.0, d2), DualScalar(0.0, target.du));
      }
    }

    const Radii printed = [&] {
      try {
        return printed_radii(kind, g, s.slope);
      } catch (const Error&) {
        return Radii{{kNaN, kNaN}, {kNaN, kNaN}};
      }
    }();
    radius.add(sigma * printed.radius, s.radii_oracle.radius);
    const DualScalar rho_ref = arcsin_branch(s.gamma_oracle);
    if (kind == Kind::EG) {
      spherical.add(DualScalar(sigma * printed.spherical.re), DualScalar(rho_ref.re));
    } else {
      spherical.add(printed.spherical, rho_ref);
    }

    const std::pair<const Radii*, DualScalar> radii[2] = {{&s.radii, sigma * s.gamma_closed},
                                                           {&s.radii_oracle, s.gamma_oracle}};
    for (const auto& [r, gi] : radii) {
      identity.add(r->radius * sqrt(1.0 + gi * gi), 1.0);
      identity.add(sin(r->spherical), r->radius);
    }

    if (kind == Kind::EG) {
      const DualAngle a = dual_angle(s.base.e, s.point);
      bertrand.add(DualScalar(a.theta, a.theta_star), DualScalar(std::numbers::pi / 4, 0.0));
    }
    if (kind == Kind::TG) tg_alt.add(tg_curvature_rederived(g, s.slope), s.gamma_oracle);
  }

  if (!developable) {
    dev.force(Verdict::HypothesisNotMet);
    tg_dev_alt.force(Verdict::HypothesisNotMet);
    eg_dev_alt.force(Verdict::HypothesisNotMet);
  }

  for (Claim* c : {&construct, &frame, &ortho, &deriv, &curv, &zero, &darboux, &dev, &radius, &spherical, &identity}) {
    rows.push_back(c->finish());
  }
  if (kind == Kind::EG) {
    rows.push_back(bertrand.finish());
    rows.push_back(eg_dev_alt.finish());
    Claim dual_rho{"eg.spherical-radius-dual",
                   "du(rho2) = -(gam* + W*)/(sqrt2 (1+gam^2)^(3/2) cos(arcsin((1-gam)/sqrt(2+2gam^2))))",
                   Gate::Advisory, tr, td};
    dual_rho.force(Verdict::OutOfScope);
    rows.push_back(dual_rho.finish());
  }
  if (kind == Kind::TG) {
    rows.push_back(tg_alt.finish());
    rows.push_back(tg_dev_alt.finish());
  }
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

const char* to_string(Gate g) noexcept { return g == Gate::MustVerify ? "must-verify" : "advisory"; }

bool Ledger::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const LedgerRow& r) { return r.passed(); });
}

const LedgerRow* Ledger::find(const std::string& claim_id) const {
  for (const auto& r : rows) {
    if (r.report.claim_id == claim_id) return &r;
  }
  return nullptr;
}

Ledger verify(const CurveSpec& base, const Range& window, const VerifyOptions& options) {
  if (!(options.tol_re > 0.0) || !(options.tol_du > 0.0) || !(options.identity_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  }
  Ledger ledger;
  ledger.curve = base.name();
  for (Kind k : kAllKinds) verify_kind(k, base, window, options, ledger.rows);
  std::sort(ledger.rows.begin(), ledger.rows.end(),
            [](const LedgerRow& a, const LedgerRow& b) { return a.report.claim_id < b.report.claim_id; });
  return ledger;
}

void write_ledger(std::ostream& out, const Ledger& ledger) {
  out << "claim_id\tlocation\tsamples\tmax_re\tmax_du\ttol_re\ttol_du\tverdict\tgate\n";
  for (const auto& r : ledger.rows) {
    out << r.report.claim_id << '\t' << r.location << '\t' << r.report.samples << '\t' << fmt(r.report.max_re)
        << '\t' << fmt(r.report.max_du) << '\t' << fmt(r.tol_re) << '\t' << fmt(r.tol_du) << '\t'
        << to_string(r.report.verdict) << '\t' << to_string(r.gate) << '\n';
  }
}

}  // namespace dualruled
