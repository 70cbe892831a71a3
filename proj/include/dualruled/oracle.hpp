#pragma once

/**
 * @file oracle.hpp
 * @brief Independent frame recomputation and residual bookkeeping.
 *
 * The oracle sees only samples of a dual spherical curve on a uniform grid.
 * It differentiates them with grid stencils and rebuilds the Darboux frame
 * through the chain rule, so nothing here depends on how the samples were
 * produced.
 */

#include <string>
#include <vector>

#include "dualruled/curve.hpp"

namespace dualruled {

inline constexpr double kDefaultTolRe = 1e-6;
inline constexpr double kDefaultTolDu = 1e-5;
/// Uniform nodes used when resampling a derived curve over a window.
inline constexpr std::size_t kOracleNodes = 512;

struct OracleFrames {
  std::vector<double> u;
  std::vector<DarbouxFrame> frames;  // s holds u; s_bar is the cumulative dual length
  std::vector<DualScalar> rate;  // ‖dẽ/du‖, the dual speed in the grid parameter
  std::vector<bool> regular;
};

/// Frames of the curve sampled at u0 + i*h. A node where the real indicatrix
/// stalls is kept with regular = false and a default frame.
/// Throws GridTooSmall, or NotDualUnit when a sample is off the sphere by > 1e-9.
OracleFrames recompute_frame(const std::vector<DualVec3>& samples, double u0, double h);

enum class Verdict { Verified, Suspect, HypothesisNotMet, OutOfScope };

const char* to_string(Verdict v) noexcept;

struct ResidualReport {
  std::string claim_id;
  std::size_t samples = 0;
  double max_re = 0.0;
  double max_du = 0.0;
  Verdict verdict = Verdict::Verified;
};

/// Largest |closed − oracle| per part. Non-finite closed values count as an
/// infinite residual. Throws InvalidArgument on length mismatch.
ResidualReport compare(const std::string& claim_id, const std::vector<DualScalar>& closed,
                       const std::vector<DualScalar>& oracle, double tol_re, double tol_du);

}  // namespace dualruled
