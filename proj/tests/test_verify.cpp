#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "core/verify.hpp"

using namespace gsh;

namespace {

VerifyConfig reduced_config() {
  VerifyConfig cfg;
  cfg.reduction_grid = 10;
  cfg.unitarity_pairs = 50;
  cfg.hermiticity_draws = 50;
  cfg.orthonormality_axes = 3;
  cfg.normalization_axes = 3;
  cfg.completeness_axes = 5;
  cfg.completeness_points = 100;
  cfg.eigen_axes = 3;
  cfg.eigen_points = 20;
  cfg.chain_triples = 10;
  cfg.audit_axes = 2;
  cfg.audit_grid = 10;
  return cfg;
}

//! Integral of the density over [c0,c1] x [p0,p1] in (cos(theta), phi),
//! 8-point Gauss-Legendre per dimension; exact for this integrand's degree.
double bin_mass(const GeneralizedHarmonic &h, double c0, double c1, double p0,
                double p1) {
  std::vector<double> x, w;
  gauss_legendre(8, x, w);
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double c = 0.5 * (c1 + c0) + 0.5 * (c1 - c0) * x[i];
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double p = 0.5 * (p1 + p0) + 0.5 * (p1 - p0) * x[j];
      total += w[i] * w[j] *
               probability(h, SpherePoint(std::acos(c), normalize_azimuth(p)));
    }
  }
  return total * 0.25 * (c1 - c0) * (p1 - p0);
}

} // namespace

TEST_CASE("run_suite is deterministic and gates green on a reduced config") {
  const VerifyConfig cfg = reduced_config();
  const VerificationReport a = run_suite(cfg);
  const VerificationReport b = run_suite(cfg);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.all_gating_pass());
  CHECK(a.suites.size() == 13);
  for (const SuiteResult &s : a.suites)
    if (s.name != "printed_forms")
      CHECK(s.max_residual <= s.tolerance);
}

TEST_CASE("a zero pole margin surfaces the step-validity failure as data") {
  VerifyConfig cfg = reduced_config();
  cfg.theta_min = 0.0;
  const VerificationReport report = run_suite(cfg);
  CHECK_FALSE(report.all_gating_pass());
  bool saw_eigen_failure = false;
  for (const SuiteResult &s : report.suites)
    if (s.name.rfind("eigenvalue", 0) == 0 && s.status == SuiteStatus::Fail) {
      saw_eigen_failure = true;
      CHECK(s.details.rfind("error:", 0) == 0);
    }
  CHECK(saw_eigen_failure);
}

TEST_CASE("report JSON carries the schema the CLI promises") {
  VerifyConfig cfg = reduced_config();
  const auto j = nlohmann::json::parse(run_suite(cfg).to_json());
  CHECK(j["seed"] == 42);
  CHECK(j["config"]["rng"] == "splitmix64 v1");
  CHECK(j["config"]["tol_algebra"] == 1e-12);
  CHECK(j["suites"].is_array());
  for (const auto &s : j["suites"]) {
    CHECK(s.contains("name"));
    CHECK(s.contains("status"));
    CHECK(s.contains("max_residual"));
    CHECK(s.contains("tolerance"));
    CHECK(s.contains("details"));
  }
}

TEST_CASE("printed-form audit matches the frozen deviation profile") {
  const auto entries = printed_form_audit(7, 5, 20);
  CHECK(entries.size() == 9);
  auto find = [&](AxisKind kind, int m) {
    for (const AuditEntry &e : entries)
      if (e.kind == kind && e.m == m)
        return e.max_deviation;
    FAIL("missing audit entry");
    return -1.0;
  };
  CHECK(find(AxisKind::W, 0) <= 1e-12);
  CHECK(find(AxisKind::U, 0) <= 1e-12);
  CHECK(find(AxisKind::V, 0) <= 1e-12);
  CHECK(find(AxisKind::V, -1) <= 1e-12);
  // the transcription typos: sign flip on the w/u m=+-1 rows, an extra
  // sin(theta') factor in the u-kind m=+-1 prefactors
  CHECK(find(AxisKind::W, 1) > 0.3);
  CHECK(find(AxisKind::W, -1) > 0.3);
  CHECK(find(AxisKind::U, 1) > 0.01);
  CHECK(find(AxisKind::U, -1) > 0.01);
}

TEST_CASE("rejection sampler basics") {
  const GeneralizedHarmonic h = generalized_harmonic(1, Axis(kPi / 3, 1.0));
  CHECK_THROWS_AS(sample(h, 0, 1), std::invalid_argument);

  const SampleBatch a = sample(h, 500, 99);
  const SampleBatch b = sample(h, 500, 99);
  CHECK(a.points.size() == 500);
  CHECK(a.seed == 99);
  CHECK(a.m == 1);
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    CHECK(a.points[k].theta() == b.points[k].theta());
    CHECK(a.points[k].phi() == b.points[k].phi());
  }
}

TEST_CASE("the envelope dominates the density everywhere") {
  const double envelope = 3.0 / (4.0 * kPi) * 1.0001;
  for (int m = -1; m <= 1; ++m) {
    const GeneralizedHarmonic h = generalized_harmonic(m, Axis(0.9, 2.3));
    for (int i = 0; i < 200; ++i)
      for (int j = 0; j < 200; ++j) {
        const SpherePoint p((i + 0.5) * kPi / 200, j * kTwoPi / 200);
        CHECK(probability(h, p) <= envelope);
      }
  }
}

TEST_CASE("sampled draws follow the density: chi-squared over a 10x10 "
          "binning of (cos theta, phi)") {
  const GeneralizedHarmonic h = generalized_harmonic(1, Axis(kPi / 3, 1.0));
  const std::size_t n = 100000;
  const SampleBatch batch = sample(h, n, 42);

  const int nb = 10;
  int counts[10][10] = {};
  for (const SpherePoint &p : batch.points) {
    int bi = static_cast<int>((std::cos(p.theta()) + 1.0) / 2.0 * nb);
    int bj = static_cast<int>(p.phi() / kTwoPi * nb);
    bi = std::clamp(bi, 0, nb - 1);
    bj = std::clamp(bj, 0, nb - 1);
    ++counts[bi][bj];
  }

  double statistic = 0.0;
  double mass_total = 0.0;
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      const double mass =
          bin_mass(h, -1.0 + 2.0 * i / nb, -1.0 + 2.0 * (i + 1) / nb,
                   kTwoPi * j / nb, kTwoPi * (j + 1) / nb);
      mass_total += mass;
      const double expected = mass * n;
      const double diff = counts[i][j] - expected;
      statistic += diff * diff / expected;
    }
  CHECK(std::fabs(mass_total - 1.0) <= 1e-12);
  // 0.999 quantile of chi-squared with 99 degrees of freedom
  CHECK(statistic < 148.23035916510173);
}
