#pragma once

/**
 * @file smarandache.hpp
 * @brief The four Smarandache curves of a dual spherical curve.
 *
 * For a base frame (ẽ, t̃, g̃) the derived curves are
 *
 *   ET  (ẽ + t̃)/√2      EG  (ẽ + g̃)/√2
 *   TG  (t̃ + g̃)/√2      ETG (ẽ + t̃ + g̃)/√3
 *
 * The *_closed / printed_* functions evaluate published closed forms in dual
 * arithmetic, exactly as written, so they can be checked against the oracle.
 * γ̄′ always means dγ̄/ds̄.
 */

#include <array>
#include <string_view>
#include <vector>

#include "dualruled/curve.hpp"
#include "dualruled/study_map.hpp"

namespace dualruled {

enum class Kind { ET, EG, TG, ETG };

inline constexpr std::array<Kind, 4> kAllKinds = {Kind::ET, Kind::EG, Kind::TG, Kind::ETG};

const char* to_string(Kind kind) noexcept;
/// Case-insensitive "ET", "EG", "TG", "ETG". Throws InvalidArgument.
Kind parse_kind(std::string_view text);

/// Coefficients of (ẽ, t̃, g̃) in the derived curve.
Vec3 kind_weights(Kind kind);

DualVec3 smarandache_point(Kind kind, const DarbouxFrame& base);

/// EG construction is singular where |1 − γ| falls below this.
inline constexpr double kPoleTolerance = 1e-9;
/// Comparison suites skip EG samples with |1 − γ| at or below this.
inline constexpr double kPoleExclusion = 1e-6;

/// Whether the derived curve has a regular real indicatrix at this γ̄.
bool regularity(Kind kind, const DualScalar& gamma_bar);

/// +1, or −1 for EG past the pole (γ > 1), where the derived tangent runs
/// against t̃ and the closed forms describe the reversed orientation.
double orientation(Kind kind, const DualScalar& gamma_bar);

/// Rows (ẽᵢ, t̃ᵢ, g̃ᵢ) in the base frame. Throws DegenerateSpeed for EG at the pole.
DualMat3 transformed_frame(Kind kind, const DualScalar& gamma_bar);

DualScalar closed_form_curvature(Kind kind, const DualScalar& gamma_bar, const DualScalar& slope);

/// TG curvature recomputed from the TG frame: (1 + 2γ̄² + 2γ̄′)/(1 + 2γ̄²)^(3/2).
DualScalar tg_curvature_rederived(const DualScalar& gamma_bar, const DualScalar& slope);

/// Published Darboux vector of the derived curve, in the base frame.
DualVec3 darboux_vector_closed(Kind kind, const DualScalar& gamma_bar, const DualScalar& slope,
                               const DarbouxFrame& base);

struct Radii {
  DualScalar radius;     // R̄
  DualScalar spherical;  // ρ̄
};

/// R̄ᵢ = (1 + γ̄ᵢ²)^(-1/2) with γ̄ᵢ from closed_form_curvature.
Radii derived_radii(Kind kind, const DualScalar& gamma_bar, const DualScalar& slope);

/// The published radius expressions. ρ̄ is arcsin of the printed R̄; for EG
/// only the real part of ρ̄ is defined (du is NaN). May throw on division by a
/// vanishing radicand.
Radii printed_radii(Kind kind, const DualScalar& gamma_bar, const DualScalar& slope);

/// Published derivative matrix d(ẽᵢ, t̃ᵢ, g̃ᵢ)/ds̄ᵢ in the base frame. Only EG
/// and ETG are transcribed; other kinds throw InvalidArgument.
DualMat3 printed_frame_derivative(Kind kind, const DualScalar& gamma_bar, const DualScalar& slope);

inline constexpr double kDevelopableTolerance = 1e-9;

/// Residual of the published developability condition for a developable base
/// (Δ = 0, so γ̄ = γ + εδ and γ̄′ = γ′ + εδ′). delta_i is the measured δᵢ of
/// the derived curve. `variant` selects the (2 + 4γ²) reading of the TG form.
/// Throws HypothesisNotMet when |Δ| > kDevelopableTolerance.
double developability_condition(Kind kind, const CurvatureData& base, const DualScalar& slope,
                                double delta_i, bool variant = false);

/// The δᵢ that satisfies the published condition. A developable derived
/// surface has δᵢ = γ̄ᵢ.du, so this is compared with the oracle's γ̄ᵢ.du.
double developability_prediction(Kind kind, const CurvatureData& base, const DualScalar& slope,
                                 bool variant = false);

/// Dual angle between ẽ and the EG curve at s.
DualAngle bertrand_offset_params(const CurveSpec& base, double s);

/// γ̄ᵢ at s from a frame rebuilt on a local sample grid of the derived curve.
DualScalar oracle_curvature(Kind kind, const CurveSpec& base, double s);

struct SmarandacheSample {
  double s = 0.0;
  DarbouxFrame base;
  CurvatureData base_curvature;
  DualScalar slope;  // γ̄′
  DualVec3 point;    // α̃ᵢ
  bool regular = false;
  double orientation = 1.0;

  DualMat3 frame_matrix;       // printed
  DarbouxFrame oracle;         // frame of the derived curve
  DualMat3 oracle_derivative;  // d(ẽᵢ, t̃ᵢ, g̃ᵢ)/ds̄ᵢ in the base frame
  DualScalar gamma_closed;     // printed, orientation not applied
  DualScalar gamma_oracle;
  DualVec3 d_closed;
  DualVec3 d_oracle;  // γ̄ᵢẽᵢ + g̃ᵢ from the oracle frame
  Radii radii;         // derived_radii
  Radii radii_oracle;  // from the oracle curvature
};

struct SmarandacheResult {
  Kind kind = Kind::ET;
  CurveSpec curve;  // derived curve sampled on the oracle grid
  std::vector<double> grid;
  std::vector<DualVec3> grid_points;
  std::vector<SmarandacheSample> samples;
};

/// Samples the derived curve on a uniform grid of at least kOracleNodes nodes
/// that contains every window sample (padded past the window ends where the
/// base domain allows), runs the oracle, and evaluates every closed form at
/// the window samples.
SmarandacheResult analyze(Kind kind, const CurveSpec& base, const Range& window);

/// Surface of the derived lines, anchored at the base central point.
RuledPatch sample_smarandache_surface(Kind kind, const CurveSpec& base, const Range& s, const Range& u);

}  // namespace dualruled
