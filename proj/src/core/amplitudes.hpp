#pragma once
#include <array>
#include <complex>

#include "geometry.hpp"

namespace gsh {

using Amplitude = std::complex<double>;

//! Row/column index for a projection quantum number, order (+1, 0, -1).
inline int projection_index(int m) {
  if (m < -1 || m > 1)
    throw std::domain_error("projection quantum number must be -1, 0 or +1");
  return 1 - m;
}

//! 3x3 complex table of spin-1 projection amplitudes between two axes,
//! indexed [m_i][m_f] in the order (+1, 0, -1). Unitary by construction.
struct TransitionMatrix {
  std::array<std::array<Amplitude, 3>, 3> entries{};
  Axis source;
  Axis target;

  Amplitude operator()(int m_i, int m_f) const {
    return entries[projection_index(m_i)][projection_index(m_f)];
  }
};

//! Two-axis spin-1 amplitude chi(m_i along a; m_f along c) in closed form.
Amplitude chi_general(int m_i, const Axis &a, int m_f, const Axis &c);

//! Specialization of the two-axis table to the z target. Implemented as its
//! own set of closed forms so it can be cross-checked against chi_general.
Amplitude chi_to_z(int m_i, const Axis &a, int m_f);

//! Tabulates chi_general over all nine projection pairs.
TransitionMatrix chi_matrix(const Axis &a, const Axis &c);

//! Matrix product chi_matrix(a,b) * chi_matrix(b,c); compared against
//! chi_matrix(a,c) by the verification engine (composition law).
TransitionMatrix chain(const Axis &a, const Axis &b, const Axis &c);

} // namespace gsh
