#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "quadrature.hpp"
#include "rng.hpp"

namespace gsh {

struct VerifyConfig {
  std::uint64_t seed = 42;
  double tol_algebra = 1e-12;
  double tol_fd = 1e-6;
  double tol_l2 = 1e-5;
  double fd_step = 1e-5;
  double l2_step = 1e-4;
  double theta_min = kPoleExclusion;

  int reduction_grid = 50; // 50x50 points
  int unitarity_pairs = 1000;
  int hermiticity_draws = 1000;
  int orthonormality_axes = 50;
  int normalization_axes = 50;
  int completeness_axes = 100;
  int completeness_points = 10000;
  int eigen_axes = 100;
  int eigen_points = 200;
  int chain_triples = 100;
  int audit_axes = 20;
  int audit_grid = 50;
  int rule_n_theta = 16;
  int rule_n_phi = 32;
};

enum class SuiteStatus { Pass, Fail, ReportOnly };

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::Fail;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string details;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  VerifyConfig config;
  std::vector<SuiteResult> suites;

  bool all_gating_pass() const;
  //! Serialized as {seed, config, suites:[{name,status,max_residual,
  //! tolerance,details}]}.
  std::string to_json() const;
};

//! Runs every identity suite in a fixed order, deterministically for a
//! given seed. Failures are data, never exceptions.
VerificationReport run_suite(const VerifyConfig &config);

//! One printed-closed-form audit line: harmonic identified by axis kind
//! and projection, with the max |printed - normative| over the audit grid.
struct AuditEntry {
  AxisKind kind;
  int m;
  double max_deviation;
};

std::vector<AuditEntry> printed_form_audit(std::uint64_t seed, int n_axes,
                                           int grid);

struct SampleBatch {
  std::vector<SpherePoint> points;
  std::uint64_t seed = 0;
  int m = 0;
  Axis axis{0.0, 0.0};
  AxisKind kind = AxisKind::W;
};

//! Rejection sampler for the harmonic's density: uniform sphere proposal,
//! envelope 3/(4*pi) * 1.0001. Deterministic given the seed.
SampleBatch sample(const GeneralizedHarmonic &h, std::size_t n,
                   std::uint64_t seed);

//! Axis drawn uniformly on the sphere (uniform in cos(theta) and phi).
Axis random_axis(SplitMix64 &rng);

//! Point uniform on the sphere, colatitude restricted to
//! [theta_min, pi - theta_min] when theta_min > 0.
SpherePoint random_point(SplitMix64 &rng, double theta_min = 0.0);

} // namespace gsh
