#pragma once
#include <array>

#include "amplitudes.hpp"
#include "geometry.hpp"

namespace gsh {

//! Which frame vector quantizes the initial state.
enum class AxisKind { W, U, V };

//! An l = 1 harmonic for an arbitrary quantization axis, represented by a
//! complex coefficient triple over the ordinary basis (order m = +1, 0, -1).
//! The coefficient row is a row of a unitary matrix, so sum |c_j|^2 = 1.
struct GeneralizedHarmonic {
  int m;
  Axis axis;
  AxisKind kind;
  std::array<Amplitude, 3> coeffs;
};

//! Ordinary l = 1 spherical harmonics (z quantization axis).
Amplitude ordinary_harmonic(int m, const SpherePoint &p);

//! Harmonic for projection m along the axis (w of its frame). This
//! coefficient construction is the single source of truth; printed closed
//! forms are audit-only.
GeneralizedHarmonic generalized_harmonic(int m, const Axis &a);

//! Harmonic quantized along the u or v frame vector of `a`. The angle
//! substitutions (t' -> t' - pi/2 for U; t' = pi/2, p' -> p' - pi/2 for V)
//! are folded into the coefficient formulas via shifted-angle identities,
//! so no out-of-range Axis is ever constructed.
GeneralizedHarmonic axis_variant(int m, const Axis &a, AxisKind kind);

//! Coefficient triple dotted with the ordinary basis at p.
Amplitude evaluate(const GeneralizedHarmonic &h, const SpherePoint &p);

//! Verbatim transcription of the published closed forms (including their
//! typos). Used only by the audit, never by the normative pipeline.
Amplitude printed_closed_form(int m, const Axis &a, AxisKind kind,
                              const SpherePoint &p);

//! |evaluate|^2, clamped at zero from below; units 1/steradian.
double probability(const GeneralizedHarmonic &h, const SpherePoint &p);

} // namespace gsh
