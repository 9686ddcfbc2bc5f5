#include "harmonics.hpp"

namespace gsh {

namespace {

const double kNorm1 = std::sqrt(3.0 / (8.0 * kPi)); // sqrt(3/8pi)
const double kNorm0 = std::sqrt(3.0 / (4.0 * kPi)); // sqrt(3/4pi)

Amplitude polar_phase(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

// Coefficient triple for projection m given the effective quantization
// angles (cos, sin of the effective colatitude; effective azimuth). The
// W/U/V variants differ only in this substitution.
std::array<Amplitude, 3> coefficient_row(int m, double ct, double st,
                                         double phi) {
  const Amplitude em = polar_phase(-phi);
  const Amplitude ep = polar_phase(phi);
  const double r2 = 0.70710678118654752440;
  switch (m) {
  case 1:
    return {0.5 * (1.0 + ct) * em, r2 * st, 0.5 * (1.0 - ct) * ep};
  case 0:
    return {-r2 * st * em, Amplitude(ct), r2 * st * ep};
  case -1:
    return {0.5 * (1.0 - ct) * em, -r2 * st, 0.5 * (1.0 + ct) * ep};
  default:
    throw std::domain_error("projection quantum number must be -1, 0 or +1");
  }
}

} // namespace

Amplitude ordinary_harmonic(int m, const SpherePoint &p) {
  const double st = std::sin(p.theta()), ct = std::cos(p.theta());
  switch (m) {
  case 1:
    return -kNorm1 * st * polar_phase(p.phi());
  case 0:
    return kNorm0 * ct;
  case -1:
    return kNorm1 * st * polar_phase(-p.phi());
  default:
    throw std::domain_error("projection quantum number must be -1, 0 or +1");
  }
}

GeneralizedHarmonic generalized_harmonic(int m, const Axis &a) {
  return {m, a, AxisKind::W,
          {chi_to_z(m, a, 1), chi_to_z(m, a, 0), chi_to_z(m, a, -1)}};
}

GeneralizedHarmonic axis_variant(int m, const Axis &a, AxisKind kind) {
  switch (kind) {
  case AxisKind::W:
    return generalized_harmonic(m, a);
  case AxisKind::U:
    // t' -> t' - pi/2: cos -> sin t', sin -> -cos t'; azimuth unchanged.
    return {m, a, AxisKind::U,
            coefficient_row(m, std::sin(a.theta()), -std::cos(a.theta()),
                            a.phi())};
  case AxisKind::V:
    // t' = pi/2, p' -> p' - pi/2.
    return {m, a, AxisKind::V,
            coefficient_row(m, 0.0, 1.0, a.phi() - kPi / 2.0)};
  }
  throw std::domain_error("unknown axis kind");
}

Amplitude evaluate(const GeneralizedHarmonic &h, const SpherePoint &p) {
  return h.coeffs[0] * ordinary_harmonic(1, p) +
         h.coeffs[1] * ordinary_harmonic(0, p) +
         h.coeffs[2] * ordinary_harmonic(-1, p);
}

Amplitude printed_closed_form(int m, const Axis &a, AxisKind kind,
                              const SpherePoint &p) {
  const double tp = a.theta(), t = p.theta();
  const double d = a.phi() - p.phi(); // phi' - phi
  const double sp = std::sin(tp), cp = std::cos(tp);
  const double st = std::sin(t), ct = std::cos(t);
  const Amplitude i(0.0, 1.0);

  switch (kind) {
  case AxisKind::W:
    switch (m) {
    case 1:
      return kNorm1 *
             (cp * st * std::cos(d) + sp * ct + i * st * std::sin(d));
    case 0:
      return kNorm0 * (ct * cp + st * sp * std::cos(d));
    case -1:
      return kNorm1 *
             (-st * cp * std::cos(d) + sp * ct - i * st * std::sin(d));
    }
    break;
  case AxisKind::U:
    // As printed, the m = +/-1 forms carry "i sin t sin(p'-p)" inside a
    // bracket already multiplied by sin t (an apparent extra sin t).
    switch (m) {
    case 1:
      return -kNorm1 * (cp * ct + st * (sp * std::cos(d) -
                                        i * st * std::sin(d)));
    case 0:
      return kNorm0 * (sp * ct - cp * st * std::cos(d));
    case -1:
      return kNorm1 * (cp * ct + st * (sp * std::cos(d) +
                                       i * st * std::sin(d)));
    }
    break;
  case AxisKind::V:
    switch (m) {
    case 1:
      return kNorm1 * (ct + i * st * std::cos(d));
    case 0:
      return kNorm0 * st * std::sin(d);
    case -1:
      return -kNorm1 * (ct + i * st * std::cos(-d));
    }
    break;
  }
  throw std::domain_error("projection quantum number must be -1, 0 or +1");
}

double probability(const GeneralizedHarmonic &h, const SpherePoint &p) {
  const double v = std::norm(evaluate(h, p));
  return v < 0.0 ? 0.0 : v;
}

} // namespace gsh
