/* C interface to the generalized l=1 spherical harmonic library.
 *
 * All functions return a gsh_status; results come back through out
 * parameters. Handles are opaque and must be released with the matching
 * destroy/free call. Angles are radians: colatitude in [0, pi], azimuth
 * arbitrary (folded into [0, 2*pi) internally).
 */
#ifndef GSH_H
#define GSH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GSH_API __declspec(dllexport)
#else
#define GSH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  GSH_OK = 0,
  GSH_ERROR_INVALID_ARGUMENT = 1,
  GSH_ERROR_NULL_POINTER = 2,
  GSH_ERROR_INTERNAL = 3
} gsh_status;

/* Which frame vector of the axis quantizes the initial state. */
typedef enum {
  GSH_KIND_W = 0,
  GSH_KIND_U = 1,
  GSH_KIND_V = 2
} gsh_axis_kind;

GSH_API const char *gsh_version(void);
GSH_API const char *gsh_status_string(gsh_status status);

/* Message describing the most recent error on this thread. */
GSH_API const char *gsh_last_error_message(void);

/* ---- harmonics ---- */

typedef struct gsh_harmonic gsh_harmonic;

/* m in {-1, 0, +1}; axis_theta in [0, pi]. */
GSH_API gsh_status gsh_harmonic_create(int m, double axis_theta,
                                       double axis_phi, gsh_axis_kind kind,
                                       gsh_harmonic **out);
GSH_API void gsh_harmonic_destroy(gsh_harmonic *h);

GSH_API gsh_status gsh_harmonic_evaluate(const gsh_harmonic *h, double theta,
                                         double phi, double *re, double *im);

/* |amplitude|^2, clamped at zero; units 1/steradian. */
GSH_API gsh_status gsh_harmonic_density(const gsh_harmonic *h, double theta,
                                        double phi, double *density);

/* Coefficient triple over the ordinary basis, order m = +1, 0, -1. */
GSH_API gsh_status gsh_harmonic_coefficients(const gsh_harmonic *h,
                                             double re[3], double im[3]);

/* n points from the harmonic's density by seeded rejection sampling;
 * thetas/phis must hold n doubles each. */
GSH_API gsh_status gsh_harmonic_sample(const gsh_harmonic *h, size_t n,
                                       uint64_t seed, double *thetas,
                                       double *phis);

/* ---- verification ---- */

typedef struct gsh_verify_options {
  uint64_t seed;
  double tol_algebra; /* algebraic/quadrature identities */
  double tol_fd;      /* first-order finite-difference residuals */
  double tol_l2;      /* total-angular-momentum-squared residuals */
} gsh_verify_options;

GSH_API void gsh_verify_options_init(gsh_verify_options *options);

/* Runs every identity suite. *all_pass is 1 iff every gating suite passed.
 * *report_json receives the full report; free it with gsh_string_free. */
GSH_API gsh_status gsh_verify_run(const gsh_verify_options *options,
                                  int *all_pass, char **report_json);

GSH_API void gsh_string_free(char *s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GSH_H */
