#include "spinorlab/special_functions.hpp"

#include <cmath>
#include <memory>

#include "spinorlab/errors.hpp"
#include "spinorlab/quadrature.hpp"

namespace spinorlab::hyd {

double special_J(int order, double z, double gamma, double p) {
  if (order != 0 && order != 1) throw DomainError("special_J: order must be 0 or 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("special_J: gamma must be in (0, 1)");
  if (!(z > 0.0)) throw DomainError("special_J: z must be positive");
  if (!(p > 0.0)) throw DomainError("special_J: p must be positive");

  const double pref = std::sqrt(2.0 / M_PI) * std::pow(2.0, gamma - 1.0);
  const double atn = std::atan2(p, z);
  const double pow_term = std::pow(1.0 + (p / z) * (p / z), (gamma + 1.0) / 2.0);
  if (order == 0) {
    return pref * std::tgamma(gamma + 1.0) / (z * z * p * pow_term) *
           std::sin((1.0 + gamma) * atn);
  }
  // order == 1: the two terms cancel to O(p) as p -> 0; switch to the
  // small-argument series of j_1 below p/z ~ 1e-4 to avoid the cancellation
  if (p < 1e-4 * z) {
    const double t1 = (p / 3.0) * std::tgamma(gamma + 3.0) / std::pow(z, gamma + 3.0);
    const double t2 = (p * p * p / 30.0) * std::tgamma(gamma + 5.0) / std::pow(z, gamma + 5.0);
    return std::sqrt(2.0 / M_PI) * std::pow(2.0 * z, gamma - 1.0) * (t1 - t2);
  }
  return pref * std::tgamma(gamma) / (z * z * p * pow_term) *
         (-(1.0 + gamma) * std::cos((1.0 + gamma) * atn) +
          (z / p) * std::sin((1.0 + gamma) * atn));
}

double sph_bessel_j(int l, double x) {
  if (l < 0) throw DomainError("sph_bessel_j: l must be >= 0");
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;
  if (x < 900.0) return std::sph_bessel(static_cast<unsigned>(l), x);
  const double j0 = std::sin(x) / x;
  if (l == 0) return j0;
  const double j1 = j0 / x - std::cos(x) / x;
  if (l == 1) return j1;
  double jm = j0, jc = j1;
  for (int k = 1; k < l; ++k) {
    const double jn = (2.0 * k + 1.0) / x * jc - jm;
    jm = jc;
    jc = jn;
  }
  return jc;
}

cplx sph_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw DomainError("sph_harmonic: need |m| <= l");
  const int ma = std::abs(m);
  const double leg = std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(ma), theta);
  if (m >= 0) return leg * std::polar(1.0, m * phi);
  // Y_{l,-m} = (-1)^m conj(Y_{l,m})
  const double sign = (ma % 2 == 0) ? 1.0 : -1.0;
  return sign * leg * std::polar(1.0, -ma * phi);
}

namespace {

double bessel_transform_once(int l, const RadialFn& R, double p, int n_nodes, double scale) {
  const auto rule = gauss_legendre_01(n_nodes);
  double acc = 0.0;
  for (int i = 0; i < n_nodes; ++i) {
    const double u = rule.x[i];
    const double r = scale * u / (1.0 - u);
    const double jac = scale / ((1.0 - u) * (1.0 - u));
    acc += rule.w[i] * jac * R(r) * r * r * sph_bessel_j(l, r * p);
  }
  return std::sqrt(2.0 / M_PI) * acc;
}

} // namespace

ComplexRadialFn transform_radial(int l, RadialFn R, int sign, RadialQuadrature quad) {
  if (l < 0) throw DomainError("transform_radial: l must be >= 0");
  if (quad.nodes < 8) throw DomainError("transform_radial: need at least 8 radial nodes");
  // (+/- i)^l
  cplx phase(1.0, 0.0);
  const cplx i_unit(0.0, sign >= 0 ? 1.0 : -1.0);
  for (int k = 0; k < l % 4; ++k) phase *= i_unit;

  auto shared_R = std::make_shared<RadialFn>(std::move(R));
  const int n = quad.nodes;
  const double scale = quad.scale;
  return [l, phase, shared_R, n, scale](double p) -> cplx {
    const double coarse = bessel_transform_once(l, *shared_R, p, n, scale);
    const double fine = bessel_transform_once(l, *shared_R, p, 2 * n, scale);
    const double denom = std::max(std::abs(fine), 1e-30);
    if (std::abs(fine - coarse) / denom > 1e-7 && std::abs(fine - coarse) > 1e-10)
      throw QuadratureFailure("transform_radial did not converge at p = " + std::to_string(p));
    return phase * fine;
  };
}

} // namespace spinorlab::hyd
