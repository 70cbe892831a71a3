#include "dualruled.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "dualruled/error.hpp"
#include "dualruled/io.hpp"
#include "dualruled/ledger.hpp"

using namespace dualruled;

struct dr_curve {
  CurveSpec spec;
};

struct dr_ledger {
  Ledger ledger;
};

namespace {

thread_local std::string g_last_error;

dr_status status_of(ErrorCode code) {
  return static_cast<dr_status>(static_cast<int>(code) + 1);
}

template <class F>
dr_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return DR_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return DR_E_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

Range to_range(const dr_range* r, const char* what) {
  require(r != nullptr, what);
  require(std::isfinite(r->lo) && std::isfinite(r->hi) && r->hi > r->lo && r->count >= 2,
          (std::string(what) + ": need lo < hi and count >= 2").c_str());
  return {r->lo, r->hi, r->count};
}

void put(const DualVec3& v, double out[6]) {
  const Vec3 a = v.real(), b = v.dual();
  out[0] = a.x, out[1] = a.y, out[2] = a.z;
  out[3] = b.x, out[4] = b.y, out[5] = b.z;
}

void put(const DualScalar& v, double out[2]) {
  out[0] = v.re;
  out[1] = v.du;
}

Kind to_kind(dr_kind k) {
  require(k >= DR_KIND_ET && k <= DR_KIND_ETG, "unknown kind");
  return kAllKinds[static_cast<std::size_t>(k)];
}

// Writes through a buffer so a failed computation leaves no partial file.
template <class F>
void write_file(const char* path, F&& fill) {
  require(path != nullptr && *path != '\0', "empty output path");
  std::ostringstream buf;
  fill(buf);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, std::string("cannot write ") + path);
  out << buf.str();
  out.flush();
  if (!out) throw Error(ErrorCode::Io, std::string("write failed: ") + path);
}

}  // namespace

extern "C" {

const char* dr_last_error(void) { return g_last_error.c_str(); }

const char* dr_status_name(dr_status status) {
  if (status == DR_OK) return "ok";
  if (status == DR_E_INTERNAL) return "internal";
  if (status < DR_OK || status > DR_E_INTERNAL) return "unknown";
  return to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
}

dr_status dr_kind_parse(const char* text, dr_kind* out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = static_cast<dr_kind>(static_cast<int>(parse_kind(text)));
  });
}

const char* dr_kind_name(dr_kind kind) {
  if (kind == DR_KIND_BASE) return "base";
  if (kind < DR_KIND_ET || kind > DR_KIND_ETG) return "unknown";
  return to_string(kAllKinds[static_cast<std::size_t>(kind)]);
}

dr_status dr_curve_preset(const char* name, const double* params, size_t n_params, dr_curve** out) {
  return guard([&] {
    require(name && out, "null argument");
    require(n_params == 0 || params, "null params");
    *out = nullptr;
    std::vector<double> p(params, params + n_params);
    *out = new dr_curve{make_preset(name, p)};
  });
}

dr_status dr_curve_load(const char* path, dr_curve** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = nullptr;
    *out = new dr_curve{load_sampled_curve(path)};
  });
}

void dr_curve_free(dr_curve* curve) { delete curve; }

const char* dr_curve_name(const dr_curve* curve) { return curve ? curve->spec.name().c_str() : ""; }

dr_status dr_curve_domain(const dr_curve* curve, double* lo, double* hi) {
  return guard([&] {
    require(curve && lo && hi, "null argument");
    const Interval d = curve->spec.domain();
    *lo = d.lo;
    *hi = d.hi;
  });
}

dr_status dr_curve_default_window(const dr_curve* curve, dr_range* out) {
  return guard([&] {
    require(curve && out, "null argument");
    const Range r = default_window(curve->spec);
    *out = {r.lo, r.hi, r.count};
  });
}

dr_status dr_curve_frame(const dr_curve* curve, double s, dr_frame* out) {
  return guard([&] {
    require(curve && out, "null argument");
    const DarbouxFrame f = darboux_frame(curve->spec, s);
    out->s = f.s;
    put(f.e, out->e);
    put(f.t, out->t);
    put(f.g, out->g);
    put(f.gamma_bar, out->gamma_bar);
    out->delta_param = f.delta_param;
    put(f.s_bar, out->s_bar);
  });
}

dr_status dr_curve_curvature(const dr_curve* curve, double s, dr_curvature* out) {
  return guard([&] {
    require(curve && out, "null argument");
    const CurvatureData c = curvature_data(darboux_frame(curve->spec, s));
    out->gamma = c.gamma;
    out->delta = c.delta;
    out->delta_param = c.delta_param;
    put(c.gamma_bar, out->gamma_bar);
    put(c.radius, out->radius);
    put(c.spherical_radius, out->spherical_radius);
    put(c.darboux, out->darboux);
  });
}

dr_status dr_write_analysis(const dr_curve* curve, const dr_range* window, const char* path) {
  return guard([&] {
    require(curve != nullptr, "null curve");
    const Range w = to_range(window, "window");
    write_file(path, [&](std::ostream& o) { write_analysis(o, curve->spec, w); });
  });
}

dr_status dr_write_smarandache(const dr_curve* curve, dr_kind kind, const dr_range* window,
                               const char* report_path, const char* derived_path) {
  return guard([&] {
    require(curve != nullptr, "null curve");
    const Range w = to_range(window, "window");
    const SmarandacheResult r = analyze(to_kind(kind), curve->spec, w);
    write_file(report_path, [&](std::ostream& o) { write_smarandache_report(o, r); });
    if (derived_path) write_file(derived_path, [&](std::ostream& o) { write_sampled_curve(o, r); });
  });
}

dr_status dr_write_mesh(const dr_curve* curve, dr_kind kind, const dr_range* s, const dr_range* u,
                        const char* path) {
  return guard([&] {
    require(curve != nullptr, "null curve");
    const Range rs = to_range(s, "s range");
    const Range ru = to_range(u, "u range");
    const RuledPatch patch = kind == DR_KIND_BASE
                                 ? sample_ruled_surface(curve->spec, rs, ru)
                                 : sample_smarandache_surface(to_kind(kind), curve->spec, rs, ru);
    const std::string label = curve->spec.name() + " " + dr_kind_name(kind);
    write_file(path, [&](std::ostream& o) { write_obj(o, patch, label); });
  });
}

dr_status dr_verify(const dr_curve* curve, const dr_range* window, double tol_re, double tol_du,
                    dr_ledger** out) {
  return guard([&] {
    require(curve && out, "null argument");
    *out = nullptr;
    VerifyOptions opt;
    opt.tol_re = tol_re;
    opt.tol_du = tol_du;
    *out = new dr_ledger{verify(curve->spec, to_range(window, "window"), opt)};
  });
}

void dr_ledger_free(dr_ledger* ledger) { delete ledger; }

int dr_ledger_passed(const dr_ledger* ledger) { return ledger && ledger->ledger.passed() ? 1 : 0; }

size_t dr_ledger_size(const dr_ledger* ledger) { return ledger ? ledger->ledger.rows.size() : 0; }

dr_status dr_ledger_row_at(const dr_ledger* ledger, size_t index, dr_ledger_row* out) {
  return guard([&] {
    require(ledger && out, "null argument");
    require(index < ledger->ledger.rows.size(), "row index out of range");
    const LedgerRow& r = ledger->ledger.rows[index];
    out->claim_id = r.report.claim_id.c_str();
    out->location = r.location.c_str();
    out->verdict = to_string(r.report.verdict);
    out->gate = to_string(r.gate);
    out->samples = r.report.samples;
    out->max_re = r.report.max_re;
    out->max_du = r.report.max_du;
    out->tol_re = r.tol_re;
    out->tol_du = r.tol_du;
    out->passed = r.passed() ? 1 : 0;
  });
}

dr_status dr_ledger_write(const dr_ledger* ledger, const char* path) {
  return guard([&] {
    require(ledger != nullptr, "null ledger");
    write_file(path, [&](std::ostream& o) { write_ledger(o, ledger->ledger); });
  });
}

dr_status dr_line_to_dual(const double point[3], const double direction[3], double out[6]) {
  return guard([&] {
    require(point && direction && out, "null argument");
    put(line_to_dual({point[0], point[1], point[2]}, {direction[0], direction[1], direction[2]}), out);
  });
}

dr_status dr_dual_to_line(const double v[6], double point[3], double direction[3]) {
  return guard([&] {
    require(v && point && direction, "null argument");
    const Line3 l = dual_to_line(DualVec3(Vec3{v[0], v[1], v[2]}, Vec3{v[3], v[4], v[5]}));
    point[0] = l.point.x, point[1] = l.point.y, point[2] = l.point.z;
    direction[0] = l.direction.x, direction[1] = l.direction.y, direction[2] = l.direction.z;
  });
}

dr_status dr_dual_format(double re, double du, int precision, char* buf, size_t size) {
  return guard([&] {
    require(buf && size > 0, "null buffer");
    require(precision >= 1 && precision <= 17, "precision must be 1..17");
    const std::string s = format(DualScalar(re, du), precision);
    require(s.size() < size, "buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

dr_status dr_dual_parse(const char* text, double* re, double* du) {
  return guard([&] {
    require(text && re && du, "null argument");
    const DualScalar v = parse_dual(text);
    *re = v.re;
    *du = v.du;
  });
}

}  // extern "C"
