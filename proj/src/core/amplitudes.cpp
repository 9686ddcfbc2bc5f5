#include "amplitudes.hpp"

namespace gsh {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Amplitude polar_phase(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

} // namespace

Amplitude chi_general(int m_i, const Axis &a, int m_f, const Axis &c) {
  const double tp = a.theta(), t = c.theta();
  const double dphi = a.phi() - c.phi();

  const double c2p = std::cos(tp / 2) * std::cos(tp / 2);
  const double s2p = std::sin(tp / 2) * std::sin(tp / 2);
  const double c2 = std::cos(t / 2) * std::cos(t / 2);
  const double s2 = std::sin(t / 2) * std::sin(t / 2);
  const double sp = std::sin(tp), cp = std::cos(tp);
  const double st = std::sin(t), ct = std::cos(t);
  const Amplitude em = polar_phase(-dphi); // e^{-i(phi'-phi)}
  const Amplitude ep = polar_phase(dphi);  // e^{+i(phi'-phi)}

  const int row = projection_index(m_i);
  const int col = projection_index(m_f);
  switch (row * 3 + col) {
  case 0: // (+1, +1)
    return c2p * c2 * em + s2p * s2 * ep + 0.5 * sp * st;
  case 1: // (+1, 0)
    return kInvSqrt2 * (s2p * st * ep - c2p * st * em + sp * ct);
  case 2: // (+1, -1)
    return c2p * s2 * em + s2p * c2 * ep - 0.5 * sp * st;
  case 3: // (0, +1)
    return kInvSqrt2 * (-sp * c2 * em + sp * s2 * ep + cp * st);
  case 4: // (0, 0)
    return 0.5 * sp * st * em + 0.5 * sp * st * ep + cp * ct;
  case 5: // (0, -1)
    return kInvSqrt2 * (-sp * s2 * em + sp * c2 * ep - cp * st);
  case 6: // (-1, +1)
    return s2p * c2 * em + c2p * s2 * ep - 0.5 * sp * st;
  case 7: // (-1, 0)
    return kInvSqrt2 * (-s2p * st * em + c2p * st * ep - sp * ct);
  default: // (-1, -1)
    return s2p * s2 * em + c2p * c2 * ep + 0.5 * sp * st;
  }
}

Amplitude chi_to_z(int m_i, const Axis &a, int m_f) {
  const double tp = a.theta();
  const double c2p = std::cos(tp / 2) * std::cos(tp / 2);
  const double s2p = std::sin(tp / 2) * std::sin(tp / 2);
  const double sp = std::sin(tp), cp = std::cos(tp);
  const Amplitude em = polar_phase(-a.phi());
  const Amplitude ep = polar_phase(a.phi());

  // The m_i = -1 row is (sin^2(t'/2) e^{-ip'}, -sin t'/sqrt2,
  // cos^2(t'/2) e^{ip'}): the phase that keeps the table Hermitian and
  // reduces the m = -1 harmonic to the ordinary one. Some published
  // listings carry the opposite overall sign on this row.
  const int row = projection_index(m_i);
  const int col = projection_index(m_f);
  switch (row * 3 + col) {
  case 0:
    return c2p * em;
  case 1:
    return kInvSqrt2 * sp;
  case 2:
    return s2p * ep;
  case 3:
    return -kInvSqrt2 * sp * em;
  case 4:
    return cp;
  case 5:
    return kInvSqrt2 * sp * ep;
  case 6:
    return s2p * em;
  case 7:
    return -kInvSqrt2 * sp;
  default:
    return c2p * ep;
  }
}

TransitionMatrix chi_matrix(const Axis &a, const Axis &c) {
  TransitionMatrix t{{}, a, c};
  for (int m_i = 1; m_i >= -1; --m_i)
    for (int m_f = 1; m_f >= -1; --m_f)
      t.entries[projection_index(m_i)][projection_index(m_f)] =
          chi_general(m_i, a, m_f, c);
  return t;
}

TransitionMatrix chain(const Axis &a, const Axis &b, const Axis &c) {
  const TransitionMatrix ab = chi_matrix(a, b);
  const TransitionMatrix bc = chi_matrix(b, c);
  TransitionMatrix out{{}, a, c};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      Amplitude sum = 0.0;
      for (int j = 0; j < 3; ++j)
        sum += ab.entries[i][j] * bc.entries[j][k];
      out.entries[i][k] = sum;
    }
  return out;
}

} // namespace gsh
