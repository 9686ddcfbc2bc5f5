#include "gsh/gsh.h"

#include <cstring>
#include <new>
#include <string>

#include "core/harmonics.hpp"
#include "core/verify.hpp"

namespace {

thread_local std::string g_last_error;

gsh_status fail(gsh_status status, const char *message) {
  g_last_error = message;
  return status;
}

gsh::AxisKind to_kind(gsh_axis_kind kind) {
  switch (kind) {
  case GSH_KIND_U:
    return gsh::AxisKind::U;
  case GSH_KIND_V:
    return gsh::AxisKind::V;
  default:
    return gsh::AxisKind::W;
  }
}

} // namespace

struct gsh_harmonic {
  gsh::GeneralizedHarmonic value;
};

extern "C" {

const char *gsh_version(void) { return "1.0.0"; }

const char *gsh_status_string(gsh_status status) {
  switch (status) {
  case GSH_OK:
    return "ok";
  case GSH_ERROR_INVALID_ARGUMENT:
    return "invalid argument";
  case GSH_ERROR_NULL_POINTER:
    return "null pointer";
  default:
    return "internal error";
  }
}

const char *gsh_last_error_message(void) { return g_last_error.c_str(); }

gsh_status gsh_harmonic_create(int m, double axis_theta, double axis_phi,
                               gsh_axis_kind kind, gsh_harmonic **out) {
  if (!out)
    return fail(GSH_ERROR_NULL_POINTER, "output handle is null");
  *out = nullptr;
  if (kind != GSH_KIND_W && kind != GSH_KIND_U && kind != GSH_KIND_V)
    return fail(GSH_ERROR_INVALID_ARGUMENT, "unknown axis kind");
  try {
    gsh::GeneralizedHarmonic h =
        gsh::axis_variant(m, gsh::Axis(axis_theta, axis_phi), to_kind(kind));
    *out = new gsh_harmonic{std::move(h)};
    return GSH_OK;
  } catch (const std::domain_error &e) {
    return fail(GSH_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc &) {
    return fail(GSH_ERROR_INTERNAL, "allocation failure");
  }
}

void gsh_harmonic_destroy(gsh_harmonic *h) { delete h; }

gsh_status gsh_harmonic_evaluate(const gsh_harmonic *h, double theta,
                                 double phi, double *re, double *im) {
  if (!h || !re || !im)
    return fail(GSH_ERROR_NULL_POINTER, "null argument");
  try {
    const gsh::Amplitude v =
        gsh::evaluate(h->value, gsh::SpherePoint(theta, phi));
    *re = v.real();
    *im = v.imag();
    return GSH_OK;
  } catch (const std::domain_error &e) {
    return fail(GSH_ERROR_INVALID_ARGUMENT, e.what());
  }
}

gsh_status gsh_harmonic_density(const gsh_harmonic *h, double theta,
                                double phi, double *density) {
  if (!h || !density)
    return fail(GSH_ERROR_NULL_POINTER, "null argument");
  try {
    *density = gsh::probability(h->value, gsh::SpherePoint(theta, phi));
    return GSH_OK;
  } catch (const std::domain_error &e) {
    return fail(GSH_ERROR_INVALID_ARGUMENT, e.what());
  }
}

gsh_status gsh_harmonic_coefficients(const gsh_harmonic *h, double re[3],
                                     double im[3]) {
  if (!h || !re || !im)
    return fail(GSH_ERROR_NULL_POINTER, "null argument");
  for (int i = 0; i < 3; ++i) {
    re[i] = h->value.coeffs[i].real();
    im[i] = h->value.coeffs[i].imag();
  }
  return GSH_OK;
}

gsh_status gsh_harmonic_sample(const gsh_harmonic *h, size_t n, uint64_t seed,
                               double *thetas, double *phis) {
  if (!h || !thetas || !phis)
    return fail(GSH_ERROR_NULL_POINTER, "null argument");
  if (n < 1)
    return fail(GSH_ERROR_INVALID_ARGUMENT, "sample count must be >= 1");
  try {
    const gsh::SampleBatch batch = gsh::sample(h->value, n, seed);
    for (size_t i = 0; i < n; ++i) {
      thetas[i] = batch.points[i].theta();
      phis[i] = batch.points[i].phi();
    }
    return GSH_OK;
  } catch (const std::exception &e) {
    return fail(GSH_ERROR_INTERNAL, e.what());
  }
}

void gsh_verify_options_init(gsh_verify_options *options) {
  if (!options)
    return;
  const gsh::VerifyConfig defaults;
  options->seed = defaults.seed;
  options->tol_algebra = defaults.tol_algebra;
  options->tol_fd = defaults.tol_fd;
  options->tol_l2 = defaults.tol_l2;
}

gsh_status gsh_verify_run(const gsh_verify_options *options, int *all_pass,
                          char **report_json) {
  if (!options || !all_pass || !report_json)
    return fail(GSH_ERROR_NULL_POINTER, "null argument");
  *report_json = nullptr;
  if (!(options->tol_algebra > 0.0) || !(options->tol_fd > 0.0) ||
      !(options->tol_l2 > 0.0))
    return fail(GSH_ERROR_INVALID_ARGUMENT, "tolerances must be positive");
  try {
    gsh::VerifyConfig config;
    config.seed = options->seed;
    config.tol_algebra = options->tol_algebra;
    config.tol_fd = options->tol_fd;
    config.tol_l2 = options->tol_l2;
    const gsh::VerificationReport report = gsh::run_suite(config);
    const std::string json = report.to_json();
    char *buf = new char[json.size() + 1];
    std::memcpy(buf, json.c_str(), json.size() + 1);
    *report_json = buf;
    *all_pass = report.all_gating_pass() ? 1 : 0;
    return GSH_OK;
  } catch (const std::exception &e) {
    return fail(GSH_ERROR_INTERNAL, e.what());
  }
}

void gsh_string_free(char *s) { delete[] s; }

} // extern "C"
