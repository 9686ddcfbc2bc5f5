#pragma once
#include <array>
#include <cmath>
#include <stdexcept>

namespace gsh {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

//! Azimuth folded into [0, 2*pi).
inline double normalize_azimuth(double phi) {
  double p = std::fmod(phi, kTwoPi);
  if (p < 0.0)
    p += kTwoPi;
  // fmod can return exactly 2*pi after the correction when phi is a tiny
  // negative number
  if (p >= kTwoPi)
    p = 0.0;
  return p;
}

//! Quantization direction given by polar angles (colatitude, azimuth).
//! Colatitude outside [0, pi] is rejected rather than reflected.
class Axis {
public:
  Axis(double theta, double phi) : theta_(theta), phi_(normalize_azimuth(phi)) {
    if (!(theta >= 0.0 && theta <= kPi))
      throw std::domain_error("axis colatitude must lie in [0, pi]");
  }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

private:
  double theta_;
  double phi_;
};

//! Point on the unit sphere, same range conventions as Axis.
class SpherePoint {
public:
  SpherePoint(double theta, double phi)
      : theta_(theta), phi_(normalize_azimuth(phi)) {
    if (!(theta >= 0.0 && theta <= kPi))
      throw std::domain_error("colatitude must lie in [0, pi]");
  }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

private:
  double theta_;
  double phi_;
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3 &o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
  double norm() const { return std::sqrt(dot(*this)); }
  double inf_norm() const {
    return std::max({std::fabs(x), std::fabs(y), std::fabs(z)});
  }
};

//! Right-handed orthonormal triple (u, v, w) attached to a quantization
//! axis, with w along the axis itself.
struct Frame {
  Vec3 u, v, w;
};

//! (sin t' cos p', sin t' sin p', cos t') for axis angles (t', p').
inline Vec3 axis_to_unit_vector(const Axis &a) {
  const double st = std::sin(a.theta()), ct = std::cos(a.theta());
  return {st * std::cos(a.phi()), st * std::sin(a.phi()), ct};
}

//! The fixed frame gauge: u = (-cos t' cos p', -cos t' sin p', sin t'),
//! v = (sin p', -cos p', 0), w along the axis. u is materialized from its
//! Cartesian components, so no negative colatitude ever appears.
inline Frame frame_from_axis(const Axis &a) {
  const double st = std::sin(a.theta()), ct = std::cos(a.theta());
  const double sp = std::sin(a.phi()), cp = std::cos(a.phi());
  Frame f;
  f.w = {st * cp, st * sp, ct};
  f.u = {-ct * cp, -ct * sp, st};
  f.v = {sp, -cp, 0.0};
  return f;
}

} // namespace gsh
