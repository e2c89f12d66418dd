#pragma once

#include <cmath>

#include "spinorlab/errors.hpp"

namespace spinorlab {

// Atomic units: hbar = 1, electron mass = 1, |e| = 1, c = 1/alpha.
// m0 and c are injectable so algebra tests can run at m0 = c = 1.
struct PhysicalConstants {
  double m0 = 1.0;                // rest mass
  double c = 137.035999084;      // speed of light
  double q = -1.0;               // charge (electron)

  // Fine-structure constant; derived, never set independently.
  double alpha_el() const { return 1.0 / c; }
  double mc() const { return m0 * c; }
  double mc2() const { return m0 * c * c; }

  void validate() const {
    if (!(m0 > 0.0) || !(c > 0.0)) throw DomainError("PhysicalConstants: m0 and c must be positive");
  }
};

struct Momentum3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm2() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  Momentum3 operator+(const Momentum3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Momentum3 operator-(const Momentum3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Momentum3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Momentum3 operator-() const { return {-x, -y, -z}; }
  double dot(const Momentum3& o) const { return x * o.x + y * o.y + z * o.z; }
  Momentum3 cross(const Momentum3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
};

inline Momentum3 operator*(double s, const Momentum3& p) { return p * s; }

// Unit direction n = (sin t cos f, sin t sin f, cos t).
struct SpinDirection {
  double theta = 0.0; // polar angle in [0, pi]
  double phi = 0.0;   // azimuthal angle in [0, 2 pi)

  Momentum3 unit() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }

  static SpinDirection x_axis() { return {M_PI / 2.0, 0.0}; }
  static SpinDirection y_axis() { return {M_PI / 2.0, M_PI / 2.0}; }
  static SpinDirection z_axis() { return {0.0, 0.0}; }
};

} // namespace spinorlab
