#pragma once

// Text formats: sampled-curve tables, CSV reports and OBJ meshes.

#include <istream>
#include <ostream>
#include <string>

#include "dualruled/smarandache.hpp"
#include "dualruled/study_map.hpp"

namespace dualruled {

/// Reads a table of u, ex, ey, ez, esx, esy, esz rows. Fields are separated by
/// commas or whitespace; '#' starts a comment; a leading non-numeric row is a
/// header. Returns the curve already arc-length parametrized.
/// Throws Parse, InvalidCurve or SingularIndicatrix.
CurveSpec read_sampled_curve(std::istream& in, const std::string& name);
/// Throws Io when the file cannot be opened.
CurveSpec load_sampled_curve(const std::string& path);

/// The derived curve of `result` on its oracle grid, in the sampled-curve format.
void write_sampled_curve(std::ostream& out, const SmarandacheResult& result);

/// s, Δ, γ, δ, γ̄.du, R̄, ρ̄ and a developable flag per window sample.
void write_analysis(std::ostream& out, const CurveSpec& curve, const Range& window);

/// Printed vs oracle curvature and radii per sample. EG rows also carry the
/// dual angle (θ, θ*) between ẽ and ẽ₂.
void write_smarandache_report(std::ostream& out, const SmarandacheResult& result);

/// Vertices row-major, each grid quad split into two triangles.
void write_obj(std::ostream& out, const RuledPatch& patch, const std::string& comment = {});

}  // namespace dualruled
