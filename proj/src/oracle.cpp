#include "dualruled/oracle.hpp"

#include <cmath>
#include <limits>

#include "dualruled/stencil.hpp"
#include "dualruled/study_map.hpp"

namespace dualruled {

OracleFrames recompute_frame(const std::vector<DualVec3>& samples, double u0, double h) {
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_dual_unit(samples[i], kDualUnitTolerance)) {
      throw Error(ErrorCode::NotDualUnit, "oracle sample " + std::to_string(i) + " is off the dual unit sphere");
    }
  }
  const std::vector<DualVec3> d1 = stencil_d1(samples, h);
  const std::vector<DualVec3> d2 = stencil_d1(d1, h);

  OracleFrames out;
  out.u.resize(n);
  out.frames.resize(n);
  out.regular.assign(n, false);
  out.rate.assign(n, DualScalar{});
  std::vector<DualScalar>& speed = out.rate;
  for (std::size_t i = 0; i < n; ++i) {
    out.u[i] = u0 + h * static_cast<double>(i);
    if (!(norm(d1[i].real()) > kRegularSpeed)) continue;
    out.frames[i] = frame_from_derivatives(samples[i], d1[i], d2[i]);
    out.frames[i].s = out.u[i];
    out.regular[i] = true;
    speed[i] = norm(d1[i]);
  }

  // Cumulative dual length: Simpson over node pairs, the three-point partial
  // rule for the node in between.
  out.frames[0].s_bar = {};
  for (std::size_t i = 2; i < n; i += 2) {
    const DualScalar base = out.frames[i - 2].s_bar;
    out.frames[i - 1].s_bar = base + (h / 12.0) * (5.0 * speed[i - 2] + 8.0 * speed[i - 1] - speed[i]);
    out.frames[i].s_bar = base + (h / 3.0) * (speed[i - 2] + 4.0 * speed[i - 1] + speed[i]);
  }
  if (n % 2 == 0) {
    out.frames[n - 1].s_bar =
        out.frames[n - 2].s_bar + (h / 12.0) * (-speed[n - 3] + 8.0 * speed[n - 2] + 5.0 * speed[n - 1]);
  }
  return out;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Suspect: return "suspect";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::OutOfScope: return "out-of-scope";
  }
  return "unknown";
}

ResidualReport compare(const std::string& claim_id, const std::vector<DualScalar>& closed,
                       const std::vector<DualScalar>& oracle, double tol_re, double tol_du) {
  if (closed.size() != oracle.size()) {
    throw Error(ErrorCode::InvalidArgument, "compare: sequences differ in length");
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  ResidualReport r;
  r.claim_id = claim_id;
  r.samples = closed.size();
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const double dre = std::abs(closed[i].re - oracle[i].re);
    const double ddu = std::abs(closed[i].du - oracle[i].du);
    r.max_re = std::max(r.max_re, std::isfinite(dre) ? dre : inf);
    r.max_du = std::max(r.max_du, std::isfinite(ddu) ? ddu : inf);
  }
  r.verdict = (r.max_re <= tol_re && r.max_du <= tol_du) ? Verdict::Verified : Verdict::Suspect;
  return r;
}

}  // namespace dualruled
