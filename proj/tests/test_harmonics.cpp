#include <doctest.h>

#include "core/harmonics.hpp"
#include "core/rng.hpp"
#include "core/verify.hpp"

using namespace gsh;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const double kY0Pole = std::sqrt(3.0 / (4.0 * kPi)); // 0.48860251190291992
const double kY1Eq = std::sqrt(3.0 / (8.0 * kPi));   // 0.34549414947133548

double abs_diff(Amplitude a, Amplitude b) { return std::abs(a - b); }

} // namespace

TEST_CASE("ordinary harmonics at reference points") {
  CHECK(abs_diff(ordinary_harmonic(0, SpherePoint(0.0, 1.3)), kY0Pole) <=
        1e-16);
  CHECK(abs_diff(ordinary_harmonic(1, SpherePoint(kPi / 2, 0.0)), -kY1Eq) <=
        1e-15);
  CHECK(abs_diff(ordinary_harmonic(-1, SpherePoint(kPi / 2, kPi / 2)),
                 Amplitude(0.0, -kY1Eq)) <= 1e-15);
  CHECK_THROWS_AS(ordinary_harmonic(3, SpherePoint(0.0, 0.0)),
                  std::domain_error);
}

TEST_CASE("coefficient rows at reference axes") {
  const auto hp = generalized_harmonic(1, Axis(kPi / 2, 0.0));
  CHECK(abs_diff(hp.coeffs[0], 0.5) <= 1e-15);
  CHECK(abs_diff(hp.coeffs[1], kInvSqrt2) <= 1e-15);
  CHECK(abs_diff(hp.coeffs[2], 0.5) <= 1e-15);

  const auto h0 = generalized_harmonic(0, Axis(0.0, 0.0));
  CHECK(abs_diff(h0.coeffs[0], 0.0) <= 1e-16);
  CHECK(abs_diff(h0.coeffs[1], 1.0) <= 1e-16);
  CHECK(abs_diff(h0.coeffs[2], 0.0) <= 1e-16);

  // m = -1 row with the Hermitian phase (oracle-frozen values)
  const auto hm = generalized_harmonic(-1, Axis(kPi / 2, 0.0));
  CHECK(abs_diff(hm.coeffs[0], 0.5) <= 1e-15);
  CHECK(abs_diff(hm.coeffs[1], -kInvSqrt2) <= 1e-15);
  CHECK(abs_diff(hm.coeffs[2], 0.5) <= 1e-15);
}

TEST_CASE("evaluation of the coefficient expansion") {
  CHECK(abs_diff(evaluate(generalized_harmonic(0, Axis(0.0, 0.0)),
                          SpherePoint(0.0, 0.0)),
                 kY0Pole) <= 1e-16);
  CHECK(abs_diff(evaluate(generalized_harmonic(0, Axis(kPi / 2, 0.0)),
                          SpherePoint(kPi / 2, 0.0)),
                 kY0Pole) <= 1e-15);
  // golden value frozen from the 50-digit oracle (tests/oracle/golden.py)
  CHECK(abs_diff(evaluate(generalized_harmonic(1, Axis(kPi / 4, kPi / 3)),
                          SpherePoint(1.0, 2.0)),
                 Amplitude(0.012887615103016410, -0.23695183120928338)) <=
        1e-15);
}

TEST_CASE("densities at reference points") {
  const GeneralizedHarmonic h0 = generalized_harmonic(0, Axis(0.0, 0.0));
  CHECK(std::fabs(probability(h0, SpherePoint(0.0, 2.0)) -
                  0.23873241463784300) <= 1e-16);
  const GeneralizedHarmonic hp = generalized_harmonic(1, Axis(0.0, 0.0));
  CHECK(std::fabs(probability(hp, SpherePoint(kPi / 2, 1.0)) -
                  0.11936620731892150) <= 1e-16);
}

TEST_CASE("reduction: the z-axis harmonics are the ordinary ones") {
  for (int m = -1; m <= 1; ++m) {
    const GeneralizedHarmonic h = generalized_harmonic(m, Axis(0.0, 0.0));
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        const SpherePoint p((i + 0.5) * kPi / 20, j * kTwoPi / 20);
        CHECK(abs_diff(evaluate(h, p), ordinary_harmonic(m, p)) <= 1e-15);
      }
  }
}

TEST_CASE("axis variants") {
  SUBCASE("u-kind at colatitude pi/2 reduces to the z-axis row up to a "
          "phase") {
    const double phi_p = 1.1;
    for (int m = -1; m <= 1; ++m) {
      const auto var = axis_variant(m, Axis(kPi / 2, phi_p), AxisKind::U);
      const auto ref = generalized_harmonic(m, Axis(0.0, 0.0));
      for (int k = 0; k < 3; ++k)
        CHECK(std::fabs(std::abs(var.coeffs[k]) - std::abs(ref.coeffs[k])) <=
              1e-15);
    }
  }

  SUBCASE("v-kind coefficients are independent of the axis colatitude") {
    for (int m = -1; m <= 1; ++m) {
      const auto a = axis_variant(m, Axis(0.3, 2.0), AxisKind::V);
      const auto b = axis_variant(m, Axis(2.8, 2.0), AxisKind::V);
      for (int k = 0; k < 3; ++k)
        CHECK(abs_diff(a.coeffs[k], b.coeffs[k]) <= 1e-16);
    }
  }

  SUBCASE("w-kind variant is the plain constructor") {
    const auto a = axis_variant(1, Axis(0.7, 0.4), AxisKind::W);
    const auto b = generalized_harmonic(1, Axis(0.7, 0.4));
    for (int k = 0; k < 3; ++k)
      CHECK(a.coeffs[k] == b.coeffs[k]);
  }
}

TEST_CASE("coefficient rows have unit norm for all kinds") {
  SplitMix64 rng(404);
  for (int n = 0; n < 200; ++n) {
    const Axis a = random_axis(rng);
    for (AxisKind kind : {AxisKind::W, AxisKind::U, AxisKind::V})
      for (int m = -1; m <= 1; ++m) {
        const auto h = axis_variant(m, a, kind);
        const double norm2 = std::norm(h.coeffs[0]) + std::norm(h.coeffs[1]) +
                             std::norm(h.coeffs[2]);
        CHECK(std::fabs(norm2 - 1.0) <= 1e-12);
      }
  }
}

TEST_CASE("completeness and conjugation symmetry at random configurations") {
  SplitMix64 rng(505);
  const double bound = 3.0 / (4.0 * kPi);
  for (int n = 0; n < 100; ++n) {
    const Axis a = random_axis(rng);
    const GeneralizedHarmonic hs[3] = {generalized_harmonic(1, a),
                                       generalized_harmonic(0, a),
                                       generalized_harmonic(-1, a)};
    for (int k = 0; k < 20; ++k) {
      const SpherePoint p = random_point(rng);
      const double total =
          probability(hs[0], p) + probability(hs[1], p) + probability(hs[2], p);
      CHECK(std::fabs(total - bound) <= 1e-12);
      CHECK(std::fabs(std::abs(evaluate(hs[0], p)) -
                      std::abs(evaluate(hs[2], p))) <= 1e-12);
    }
  }
}

TEST_CASE("printed closed forms against the coefficient expansion") {
  const Axis a(0.9, 2.3);
  double worst_w0 = 0.0, worst_v0 = 0.0, worst_vm = 0.0, worst_u0 = 0.0;
  double worst_wm = 0.0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const SpherePoint p((i + 0.5) * kPi / 20, j * kTwoPi / 20);
      worst_w0 = std::max(
          worst_w0, abs_diff(printed_closed_form(0, a, AxisKind::W, p),
                             evaluate(generalized_harmonic(0, a), p)));
      worst_u0 = std::max(
          worst_u0, abs_diff(printed_closed_form(0, a, AxisKind::U, p),
                             evaluate(axis_variant(0, a, AxisKind::U), p)));
      worst_v0 = std::max(
          worst_v0, abs_diff(printed_closed_form(0, a, AxisKind::V, p),
                             evaluate(axis_variant(0, a, AxisKind::V), p)));
      worst_vm = std::max(
          worst_vm, abs_diff(printed_closed_form(-1, a, AxisKind::V, p),
                             evaluate(axis_variant(-1, a, AxisKind::V), p)));
      // the printed w-kind m=-1 form is the negative of the construction
      worst_wm = std::max(
          worst_wm, abs_diff(printed_closed_form(-1, a, AxisKind::W, p),
                             -evaluate(generalized_harmonic(-1, a), p)));
    }
  CHECK(worst_w0 <= 1e-12);
  CHECK(worst_u0 <= 1e-12);
  CHECK(worst_v0 <= 1e-12);
  CHECK(worst_vm <= 1e-12);
  CHECK(worst_wm <= 1e-12);
}

TEST_CASE("at the printed reference point the m=0 forms coincide") {
  CHECK(abs_diff(printed_closed_form(0, Axis(kPi / 2, 0.0), AxisKind::W,
                                     SpherePoint(kPi / 2, 0.0)),
                 kY0Pole) <= 1e-15);
}
