#ifndef DUALRULED_H
#define DUALRULED_H

/*
 * C interface to the dualruled library: dual spherical curves, their dual
 * Darboux frames, the Smarandache constructions and the verification ledger.
 *
 * Every function returning dr_status leaves a message for dr_last_error() on
 * failure. Messages are per thread. Handles are not shared between threads
 * without external locking, except for read-only use.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DUALRULED_BUILD)
#    define DR_API __declspec(dllexport)
#  else
#    define DR_API __declspec(dllimport)
#  endif
#else
#  define DR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dr_status {
  DR_OK = 0,
  DR_E_ZERO_REAL_PART,
  DR_E_DOMAIN,
  DR_E_ZERO_REAL_VECTOR,
  DR_E_PARALLEL_LINES,
  DR_E_NOT_UNIT_DIRECTION,
  DR_E_NOT_DUAL_UNIT,
  DR_E_SINGULAR_INDICATRIX,
  DR_E_OUT_OF_DOMAIN,
  DR_E_GRID_TOO_SMALL,
  DR_E_DEGENERATE_SPEED,
  DR_E_HYPOTHESIS_NOT_MET,
  DR_E_INVALID_CURVE,
  DR_E_INVALID_ARGUMENT,
  DR_E_PARSE,
  DR_E_IO,
  DR_E_INTERNAL
} dr_status;

/* Smarandache kinds; DR_KIND_BASE selects the base surface in dr_write_mesh. */
typedef enum dr_kind {
  DR_KIND_BASE = -1,
  DR_KIND_ET = 0,
  DR_KIND_EG = 1,
  DR_KIND_TG = 2,
  DR_KIND_ETG = 3
} dr_kind;

typedef struct dr_curve dr_curve;
typedef struct dr_ledger dr_ledger;

/* count uniform samples over [lo, hi] */
typedef struct dr_range {
  double lo;
  double hi;
  size_t count;
} dr_range;

/* Dual 3-vectors are stored as {x, y, z, x*, y*, z*}. */
typedef struct dr_frame {
  double s;
  double e[6];
  double t[6];
  double g[6];
  double gamma_bar[2];
  double delta_param;
  double s_bar[2];
} dr_frame;

typedef struct dr_curvature {
  double gamma;
  double delta;
  double delta_param;
  double gamma_bar[2];
  double radius[2];
  double spherical_radius[2];
  double darboux[6];
} dr_curvature;

typedef struct dr_ledger_row {
  const char* claim_id;
  const char* location;
  const char* verdict; /* verified, suspect, hypothesis-not-met, out-of-scope */
  const char* gate;    /* must-verify, advisory */
  size_t samples;
  double max_re;
  double max_du;
  double tol_re;
  double tol_du;
  int passed;
} dr_ledger_row;

DR_API const char* dr_last_error(void);
DR_API const char* dr_status_name(dr_status status);

DR_API dr_status dr_kind_parse(const char* text, dr_kind* out);
DR_API const char* dr_kind_name(dr_kind kind);

/* "helicoid", "cone", "latitude-drift", "tangent-developable" */
DR_API dr_status dr_curve_preset(const char* name, const double* params, size_t n_params,
                                 dr_curve** out);
DR_API dr_status dr_curve_load(const char* path, dr_curve** out);
DR_API void dr_curve_free(dr_curve* curve);
DR_API const char* dr_curve_name(const dr_curve* curve);
DR_API dr_status dr_curve_domain(const dr_curve* curve, double* lo, double* hi);
DR_API dr_status dr_curve_default_window(const dr_curve* curve, dr_range* out);
DR_API dr_status dr_curve_frame(const dr_curve* curve, double s, dr_frame* out);
DR_API dr_status dr_curve_curvature(const dr_curve* curve, double s, dr_curvature* out);

DR_API dr_status dr_write_analysis(const dr_curve* curve, const dr_range* window, const char* path);
/* Report of one kind; derived_path (may be NULL) receives the derived curve samples. */
DR_API dr_status dr_write_smarandache(const dr_curve* curve, dr_kind kind, const dr_range* window,
                                      const char* report_path, const char* derived_path);
DR_API dr_status dr_write_mesh(const dr_curve* curve, dr_kind kind, const dr_range* s,
                               const dr_range* u, const char* path);

DR_API dr_status dr_verify(const dr_curve* curve, const dr_range* window, double tol_re,
                           double tol_du, dr_ledger** out);
DR_API void dr_ledger_free(dr_ledger* ledger);
DR_API int dr_ledger_passed(const dr_ledger* ledger);
DR_API size_t dr_ledger_size(const dr_ledger* ledger);
/* Strings in the row live as long as the ledger. */
DR_API dr_status dr_ledger_row_at(const dr_ledger* ledger, size_t index, dr_ledger_row* out);
DR_API dr_status dr_ledger_write(const dr_ledger* ledger, const char* path);

DR_API dr_status dr_line_to_dual(const double point[3], const double direction[3], double out[6]);
DR_API dr_status dr_dual_to_line(const double v[6], double point[3], double direction[3]);

/* "a + εb" with `precision` significant digits, NUL-terminated. */
DR_API dr_status dr_dual_format(double re, double du, int precision, char* buf, size_t size);
DR_API dr_status dr_dual_parse(const char* text, double* re, double* du);

#ifdef __cplusplus
}
#endif

#endif
