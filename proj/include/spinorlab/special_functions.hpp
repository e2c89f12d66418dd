#pragma once

#include <complex>
#include <functional>

#include "spinorlab/matrix4.hpp"

namespace spinorlab::hyd {

// Closed-form spherical-Bessel moments of the hydrogenic radial profile
// e^{-z r} (2 z r)^(gamma - 1):
//   J_l(z, gamma, p) = sqrt(2/pi) int_0^inf e^{-zr} (2zr)^(gamma-1) r^2 j_l(rp) dr
// for l in {0, 1}.  Requires 0 < gamma < 1, z > 0, p > 0.
double special_J(int order, double z, double gamma, double p);

// Spherical Bessel function of the first kind.  std::sph_bessel refuses
// large arguments; beyond that range the upward recurrence from the closed
// j_0, j_1 forms is stable because x >> l for every order used here.
double sph_bessel_j(int l, double x);

// Complex spherical harmonic Y_{l,m}(theta, phi), Condon-Shortley convention.
cplx sph_harmonic(int l, int m, double theta, double phi);

using RadialFn = std::function<double(double)>;
using ComplexRadialFn = std::function<cplx(double)>;

struct RadialQuadrature {
  int nodes = 512;
  double scale = 1.0; // the map r = scale * u / (1 - u) concentrates nodes near r ~ scale
};

// Spherical-Bessel transform of a radial profile belonging to Y_{l,m}:
//   F(+/-)[R(r) Y_lm] = (+/- i)^l Y_lm sqrt(2/pi) int R(r) j_l(rp) r^2 dr.
// The returned function of p carries the (+/- i)^l phase.  Throws
// QuadratureFailure when doubling the node count still moves the result.
ComplexRadialFn transform_radial(int l, RadialFn R, int sign, RadialQuadrature quad = {});

} // namespace spinorlab::hyd
