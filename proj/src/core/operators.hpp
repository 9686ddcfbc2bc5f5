#pragma once
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "harmonics.hpp"

namespace gsh {

//! Complex scalar field on the sphere, (theta, phi) -> C.
using SphereField = std::function<Amplitude(double theta, double phi)>;

enum class OperatorLabel { Lx, Ly, Lz, LxP, LyP, LzP };

//! Colatitude band excluded around the poles, where cot(theta) terms make
//! the differential operators numerically unsafe.
inline constexpr double kPoleExclusion = 0.2;

//! Largest admissible finite-difference step.
inline constexpr double kMaxStep = 1e-3;

//! First-order angular differential operator, held as the two complex
//! coefficient functions multiplying d/dtheta and d/dphi (hbar = 1).
struct AngularOperator {
  OperatorLabel label;
  std::optional<Axis> axis; // present for primed labels
  std::function<Amplitude(double theta, double phi)> coef_dtheta;
  std::function<Amplitude(double theta, double phi)> coef_dphi;
};

//! Angular momentum component operators, primary frame or the frame
//! attached to `a` (primed labels require an axis).
AngularOperator build_operator(OperatorLabel label,
                               std::optional<Axis> a = std::nullopt);

//! Central-difference application at p, step h. Requires theta in the
//! pole-safe band and h in (0, kMaxStep].
Amplitude apply(const AngularOperator &op, const SphereField &f,
                const SpherePoint &p, double h);

//! Total angular momentum squared via direct second-difference stencils:
//! -(d2/dt2 + cot t d/dt + (1/sin^2 t) d2/dp2).
Amplitude apply_l2(const SphereField &f, const SpherePoint &p, double h);

enum class EigenOperator { LzP, LxP, LyP, L2 };

struct ResidualStats {
  double max_abs = 0.0;
  double mean_abs = 0.0;
  std::size_t points_tested = 0;
  double step = 0.0;
};

//! Statistics of |(O f)(p) - expected * f(p)| for f the harmonic `h`. The
//! first-order operator kind must match the harmonic's axis kind
//! (W<->LzP, U<->LxP, V<->LyP); L2 accepts any kind.
ResidualStats eigen_residual(EigenOperator kind, const GeneralizedHarmonic &h,
                             double expected,
                             std::span<const SpherePoint> points, double step);

} // namespace gsh
