#pragma once

/**
 * @file curve.hpp
 * @brief Dual spherical curves and their dual Darboux frame.
 *
 * A CurveSpec is a curve ẽ(u) = e(u) + εe*(u) on the dual unit sphere, given
 * either analytically (the presets, differentiated exactly through Taylor
 * jets) or as a uniform table interpolated with clamped cubic splines.
 *
 * Every frame quantity is expressed in the arc length s of the real
 * indicatrix. reparametrize_arclength() installs the s ↦ u map; all
 * functions taking `s` require it.
 *
 * The frame is assembled from raw u-derivatives with the chain rule, so the
 * same code serves arc-length and non-arc-length parametrizations:
 *
 *   t̃ = ẽ_u / ‖ẽ_u‖,   g̃ = ẽ × t̃,   γ̄ = −⟨dg̃/ds̄, t̃⟩,   ds̄/ds = 1 + εΔ.
 */

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dualruled/dual_linalg.hpp"
#include "dualruled/jet.hpp"
#include "dualruled/range.hpp"

namespace dualruled {

namespace detail {
class CurveSource;
class ArcLengthMap;
}  // namespace detail

/// ẽ and its first three derivatives with respect to the raw parameter.
struct RawDerivatives {
  DualVec3 value;
  DualVec3 d1;
  DualVec3 d2;
  DualVec3 d3;
};

struct LatitudeDriftParams {
  double base_latitude = 0.3;  // radians
  double amplitude = 0.2;      // latitude swing, radians
  double pitch = 0.5;          // axial advance of the moment arm per radian
  double offset = 0.25;        // radial moment arm
};

inline constexpr int kMinSampledPoints = 64;
inline constexpr double kUnitSphereTolerance = 1e-9;
inline constexpr double kUnitSpeedTolerance = 1e-8;
inline constexpr double kRegularSpeed = 1e-8;

class CurveSpec {
 public:
  /// Writes e(u) and e*(u) for a jet-valued parameter.
  using JetFn = std::function<void(const Jet3& u, JetVec3& e, JetVec3& e_star)>;

  static CurveSpec analytic(std::string name, Interval raw_domain, double origin, JetFn fn);
  /// Uniform grid u with samples e(u), e*(u). Throws InvalidCurve when the grid
  /// is too small or non-uniform, or a sample is off the dual unit sphere.
  static CurveSpec sampled(std::string name, std::vector<double> u, std::vector<Vec3> e,
                           std::vector<Vec3> e_star);

  /// e = (cos u, sin u, 0), e* = pitch·(−u sin u, u cos u, 0).
  static CurveSpec helicoid(double pitch = 1.0);
  /// Rulings through the origin along (r cos u, r sin u, h)/√(r² + h²).
  static CurveSpec cone(double r, double h);
  /// Indicatrix whose latitude oscillates about base_latitude, with moment
  /// arm c(u) = (offset cos u, offset sin u, pitch·u); e* = c × e.
  static CurveSpec latitude_drift(const LatitudeDriftParams& params = {});
  /// Tangent lines of the space curve c with c' = (1 + k sin u)·e, where e runs
  /// along the latitude circle at `latitude`. Developable, with varying δ.
  static CurveSpec tangent_developable(double latitude = 0.4, double k = 0.3);

  const std::string& name() const;
  bool is_sampled() const;
  Interval raw_domain() const;
  /// Raw parameter where arc length is zero.
  double origin() const;
  RawDerivatives raw(double u) const;

  bool is_arclength() const { return arclength_ != nullptr; }
  /// Arc-length domain; throws InvalidArgument before reparametrization.
  Interval domain() const;
  /// Raw parameter u(s). Throws OutOfDomain.
  double parameter_at(double s) const;
  /// ẽ(s).
  DualVec3 at(double s) const;
  /// s̄(s) = s + ε∫₀ˢ Δ, integrated on the arc-length table.
  DualScalar dual_arclength_at(double s) const;

 private:
  friend CurveSpec reparametrize_arclength(const CurveSpec& raw);

  std::shared_ptr<const detail::CurveSource> source_;
  std::shared_ptr<const detail::ArcLengthMap> arclength_;
};

/// Installs the arc-length parametrization: composite Simpson over ‖ẽ_u‖ on a
/// fine raw grid, inverted by Newton iteration. Unit-speed curves map
/// identically. Throws SingularIndicatrix when ‖e_u‖ <= 1e-8 anywhere.
CurveSpec reparametrize_arclength(const CurveSpec& raw);

/// Named preset, already arc-length parametrized.
/// "helicoid" [pitch], "cone" r h, "latitude-drift" [lat amp pitch offset],
/// "tangent-developable" [lat k].
CurveSpec make_preset(const std::string& name, const std::vector<double>& params);

/// Default analysis window for a preset curve.
Range default_window(const CurveSpec& curve);

/// Stencil steps for derivatives(): order k uses a first-derivative stencil of
/// step kDerivativeSteps[k-1] applied to the order k-1 field.
inline constexpr double kDerivativeSteps[3] = {1e-3, 2e-3, 1e-2};

/// Finite-difference d^k ẽ/ds^k, k in 1..3, with 5-point stencils.
/// One-sided 4th-order stencils are used within the margin of the domain ends.
DualVec3 derivatives(const CurveSpec& curve, double s, int order);

/// Δ = ⟨e′, e*′⟩; zero exactly for developable ruled surfaces.
double distribution_parameter(const CurveSpec& curve, double s);

/// s̄ = s + ε∫₀ˢ Δ dσ. Requires 0 <= s within the domain.
DualScalar dual_arclength(const CurveSpec& curve, double s);

struct DarbouxFrame {
  DualVec3 e;
  DualVec3 t;
  DualVec3 g;
  DualScalar gamma_bar;
  double delta_param = 0.0;  // Δ
  DualScalar speed;          // ds̄/ds = 1 + εΔ
  double s = 0.0;
  DualScalar s_bar;
};

/// Frame at one point from ẽ and its first two derivatives in any regular
/// parameter. s and s_bar are left zero. Throws SingularIndicatrix.
DarbouxFrame frame_from_derivatives(const DualVec3& value, const DualVec3& d1, const DualVec3& d2);

/// Full frame at arc length s, including s̄ (negative s integrates backwards).
DarbouxFrame darboux_frame(const CurveSpec& curve, double s);

/// dγ̄/ds̄ by a 5-point stencil of the γ̄ field (step kCurvatureSlopeStep).
inline constexpr double kCurvatureSlopeStep = 1e-3;
DualScalar curvature_slope(const CurveSpec& curve, double s);

struct CurvatureData {
  DualScalar gamma_bar;
  double gamma = 0.0;
  double delta = 0.0;  // γ̄ = γ + ε(δ − γΔ)
  double delta_param = 0.0;
  DualScalar radius;            // R̄ = (1 + γ̄²)^(-1/2)
  DualScalar spherical_radius;  // ρ̄ with R̄ = sin ρ̄, γ̄ = cot ρ̄
  DualVec3 darboux;             // d̃ = γ̄ẽ + g̃
  DualVec3 darboux_unit;        // d̃ / √(1 + γ̄²)
};

/// Radius pair of a dual spherical curvature; ρ̄ = π/2 − atan γ̄ ∈ (0, π).
void curvature_radii(const DualScalar& gamma_bar, DualScalar& radius, DualScalar& spherical_radius);

CurvatureData curvature_data(const DarbouxFrame& frame);

/// Point shared by the three frame lines ẽ, t̃, g̃ (the central point of the
/// ruling): (e×e* + t×t* + g×g*) / 2.
Vec3 central_point(const DarbouxFrame& frame);

}  // namespace dualruled
