#include "spinorlab/hydrogen.hpp"

#include <omp.h>

#include <cmath>

#include "spinorlab/errors.hpp"
#include "spinorlab/quadrature.hpp"

namespace spinorlab::hyd {

double HydrogenParams::gamma() const {
  const double za = Z * constants.alpha_el();
  return std::sqrt(1.0 - za * za);
}

double HydrogenParams::norm_factor() const {
  const double g = gamma();
  return std::pow(2.0 * constants.m0 * Z, 1.5) *
         std::sqrt((1.0 + g) / (2.0 * std::tgamma(1.0 + 2.0 * g)));
}

void HydrogenParams::validate() const {
  constants.validate();
  const double za = Z * constants.alpha_el();
  if (!(za > 0.0 && za < 1.0))
    throw DomainError("hydrogen: need 0 < Z alpha < 1, got Z alpha = " + std::to_string(za));
  if (two_m != 1 && two_m != -1) throw DomainError("hydrogen ground state has m = +-1/2");
}

void QuadratureSpec::validate() const {
  if (n_radial < 8 || n_theta < 8 || n_phi < 8)
    throw DomainError("QuadratureSpec: node counts must be >= 8");
}

PositionSpinorFn ground_state_position(const HydrogenParams& params) {
  params.validate();
  const double g = params.gamma();
  const double N = params.norm_factor();
  const double mz = params.constants.m0 * params.Z;
  const double pref = (1.0 - g) / (params.Z * params.constants.alpha_el());
  const bool up = params.two_m > 0;
  return [=](double r, double theta, double phi) -> Spinor4 {
    if (!(r > 0.0)) throw DomainError("ground_state_position: r must be positive");
    const double radial = N * std::exp(-mz * r) / std::pow(2.0 * mz * r, 1.0 - g);
    const cplx y00 = sph_harmonic(0, 0, theta, phi);
    Spinor4 out;
    if (up) {
      out[0] = radial * y00;
      out[2] = cplx(0, 1) * radial * pref * std::sqrt(1.0 / 3.0) * sph_harmonic(1, 0, theta, phi);
      out[3] = cplx(0, -1) * radial * pref * std::sqrt(2.0 / 3.0) * sph_harmonic(1, 1, theta, phi);
    } else {
      out[1] = radial * y00;
      out[2] = cplx(0, 1) * radial * pref * std::sqrt(2.0 / 3.0) * sph_harmonic(1, -1, theta, phi);
      out[3] = cplx(0, -1) * radial * pref * std::sqrt(1.0 / 3.0) * sph_harmonic(1, 0, theta, phi);
    }
    return out;
  };
}

MomentumSpinorFn ground_state_momentum(const HydrogenParams& params) {
  params.validate();
  const double g = params.gamma();
  const double N = params.norm_factor();
  const double mz = params.constants.m0 * params.Z;
  const double pref = (1.0 - g) / (params.Z * params.constants.alpha_el());
  const bool up = params.two_m > 0;
  MomentumSpinorFn out;
  out.label = up ? "hydrogen ground state m=+1/2" : "hydrogen ground state m=-1/2";
  out.fn = [=](double p, double theta, double phi) -> Spinor4 {
    const double j0 = special_J(0, mz, g, p);
    const double j1 = special_J(1, mz, g, p);
    Spinor4 v;
    if (up) {
      v[0] = N * j0 * sph_harmonic(0, 0, theta, phi);
      v[2] = N * pref * j1 * std::sqrt(1.0 / 3.0) * sph_harmonic(1, 0, theta, phi);
      v[3] = -N * pref * j1 * std::sqrt(2.0 / 3.0) * sph_harmonic(1, 1, theta, phi);
    } else {
      v[1] = N * j0 * sph_harmonic(0, 0, theta, phi);
      v[2] = N * pref * j1 * std::sqrt(2.0 / 3.0) * sph_harmonic(1, -1, theta, phi);
      v[3] = -N * pref * j1 * std::sqrt(1.0 / 3.0) * sph_harmonic(1, 0, theta, phi);
    }
    return v;
  };
  return out;
}

namespace {

// Angular weights of the two kappa manifolds.  The fourth component of the
// kappa > 0 manifold carries sqrt((j+m+1)/(2j+2)), the weight the manifold
// symmetry and the explicit ground state both require.
struct TemplateWeights {
  double w[4];
  int l[4];
  int m[4];
};

TemplateWeights template_weights(int kappa, int two_j, int two_m) {
  if (two_j < 1 || two_j % 2 == 0) throw DomainError("bound template: 2j must be odd and positive");
  if (std::abs(two_m) > two_j || (two_m - two_j) % 2 != 0)
    throw DomainError("bound template: m must be in -j..j in integer steps");
  if (kappa == 0) throw DomainError("bound template: kappa must be nonzero");
  const int expected = (two_j + 1) / 2;
  if (std::abs(kappa) != expected)
    throw DomainError("bound template: |kappa| must equal j + 1/2");

  const int l_minus = (two_j - 1) / 2; // j - 1/2
  const int l_plus = (two_j + 1) / 2;  // j + 1/2
  const int m_lo = (two_m - 1) / 2;    // m - 1/2
  const int m_hi = (two_m + 1) / 2;    // m + 1/2
  const double jj = 0.5 * two_j;
  const double mm = 0.5 * two_m;

  TemplateWeights tw{};
  if (kappa > 0) {
    tw.w[0] = std::sqrt((jj + mm) / (2.0 * jj));
    tw.w[1] = std::sqrt((jj - mm) / (2.0 * jj));
    tw.w[2] = -std::sqrt((jj - mm + 1.0) / (2.0 * jj + 2.0));
    tw.w[3] = std::sqrt((jj + mm + 1.0) / (2.0 * jj + 2.0));
    tw.l[0] = tw.l[1] = l_minus;
    tw.l[2] = tw.l[3] = l_plus;
  } else {
    tw.w[0] = -std::sqrt((jj - mm + 1.0) / (2.0 * jj + 2.0));
    tw.w[1] = std::sqrt((jj + mm + 1.0) / (2.0 * jj + 2.0));
    tw.w[2] = std::sqrt((jj + mm) / (2.0 * jj));
    tw.w[3] = std::sqrt((jj - mm) / (2.0 * jj));
    tw.l[0] = tw.l[1] = l_plus;
    tw.l[2] = tw.l[3] = l_minus;
  }
  tw.m[0] = tw.m[2] = m_lo;
  tw.m[1] = tw.m[3] = m_hi;
  return tw;
}

cplx weighted_harmonic(const TemplateWeights& tw, int comp, double theta, double phi) {
  if (tw.w[comp] == 0.0 || std::abs(tw.m[comp]) > tw.l[comp]) return {0.0, 0.0};
  return tw.w[comp] * sph_harmonic(tw.l[comp], tw.m[comp], theta, phi);
}

} // namespace

PositionSpinorFn bound_template_position(int kappa, int two_j, int two_m, RadialFn g, RadialFn f) {
  const TemplateWeights tw = template_weights(kappa, two_j, two_m);
  return [=](double r, double theta, double phi) -> Spinor4 {
    const double gr = g(r), fr = f(r);
    Spinor4 out;
    out[0] = gr * weighted_harmonic(tw, 0, theta, phi);
    out[1] = gr * weighted_harmonic(tw, 1, theta, phi);
    out[2] = cplx(0, 1) * fr * weighted_harmonic(tw, 2, theta, phi);
    out[3] = cplx(0, 1) * fr * weighted_harmonic(tw, 3, theta, phi);
    return out;
  };
}

MomentumSpinorFn bound_template_momentum(int kappa, int two_j, int two_m, ComplexRadialFn g_t,
                                         ComplexRadialFn f_t) {
  const TemplateWeights tw = template_weights(kappa, two_j, two_m);
  MomentumSpinorFn out;
  out.label = "bound template kappa=" + std::to_string(kappa);
  out.fn = [=](double p, double theta, double phi) -> Spinor4 {
    const cplx gp = g_t(p), fp = f_t(p);
    Spinor4 v;
    v[0] = gp * weighted_harmonic(tw, 0, theta, phi);
    v[1] = gp * weighted_harmonic(tw, 1, theta, phi);
    v[2] = cplx(0, 1) * fp * weighted_harmonic(tw, 2, theta, phi);
    v[3] = cplx(0, 1) * fp * weighted_harmonic(tw, 3, theta, phi);
    return v;
  };
  return out;
}

// ---------------------------------------------------------------------------
// quadrature moments

namespace {

struct Moments {
  cplx s{};
  cplx s2{};
  double norm_a = 0.0;
  double norm_b = 0.0;
  cplx overlap{};
};

// <A| S_3 |B>, <A| S_3^2 |B>, norms and overlap by quadrature over
// (p, theta', phi').  Chunked per radial node; partials are summed in node
// order, so serial and OpenMP results are bit-identical.
Moments quadrature_moments(spin::SpinKind kind, const MomentumSpinorFn& a,
                           const MomentumSpinorFn& b, const PhysicalConstants& constants,
                           double radial_scale, const QuadratureSpec& quad, Exec exec) {
  quad.validate();
  const auto radial = gauss_legendre_01(quad.n_radial);
  const auto& angular = gauss_legendre(quad.n_theta);
  const double phi_w = 2.0 * M_PI / quad.n_phi;
  const bool same_state = &a == &b;

  std::vector<Moments> partials(quad.n_radial);
  std::exception_ptr failure; // exceptions must not escape the parallel region

  const auto body = [&](int iu) {
    const double u = radial.x[iu];
    const double p = radial_scale * u / (1.0 - u);
    const double jac = radial_scale / ((1.0 - u) * (1.0 - u));
    Moments acc;
    for (int it = 0; it < quad.n_theta; ++it) {
      const double ct = angular.nodes[it];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      const double theta = std::acos(ct);
      for (int ip = 0; ip < quad.n_phi; ++ip) {
        const double phi = phi_w * ip;
        const double w = radial.w[iu] * jac * p * p * angular.weights[it] * phi_w;
        const Momentum3 pvec{p * st * std::cos(phi), p * st * std::sin(phi), p * ct};
        const Matrix4 s3 = spin::spin_matrices(kind, constants, pvec).S[2];
        const Spinor4 vb = b(p, theta, phi);
        const Spinor4 va = same_state ? vb : a(p, theta, phi);
        const Spinor4 sb = s3 * vb;
        acc.s += w * va.dot(sb);
        acc.s2 += w * va.dot(s3 * sb);
        acc.norm_b += w * vb.norm2();
        acc.norm_a += same_state ? w * vb.norm2() : w * va.norm2();
        acc.overlap += same_state ? w * vb.norm2() : w * va.dot(vb);
      }
    }
    partials[iu] = acc;
  };

  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (int iu = 0; iu < quad.n_radial; ++iu) {
      try {
        body(iu);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  } else {
    for (int iu = 0; iu < quad.n_radial; ++iu) body(iu);
  }
  if (failure) std::rethrow_exception(failure);

  Moments total;
  for (const auto& m : partials) {
    total.s += m.s;
    total.s2 += m.s2;
    total.norm_a += m.norm_a;
    total.norm_b += m.norm_b;
    total.overlap += m.overlap;
  }
  return total;
}

} // namespace

SpinStats spin_statistics(spin::SpinKind kind, const HydrogenParams& params,
                          const QuadratureSpec& quad, Exec exec) {
  params.validate();
  const MomentumSpinorFn state = ground_state_momentum(params);
  return spin_statistics_state(kind, state, params.constants, params.constants.m0 * params.Z, quad,
                               exec);
}

SpinStats spin_statistics_state(spin::SpinKind kind, const MomentumSpinorFn& state,
                                const PhysicalConstants& constants, double radial_scale,
                                const QuadratureSpec& quad, Exec exec) {
  const Moments m = quadrature_moments(kind, state, state, constants, radial_scale, quad, exec);
  if (!(m.norm_b > 0.0) || !std::isfinite(m.norm_b))
    throw QuadratureFailure("spin_statistics: state norm is not positive and finite");
  // the Chakrabarti operator is non-Hermitian; expectation values are reported
  // as real parts
  const double mean = std::real(m.s) / m.norm_b;
  const double second = std::real(m.s2) / m.norm_b;
  return {mean, second - mean * mean};
}

SpinStats analytic_pauli(const HydrogenParams& params) {
  params.validate();
  const double mean = (1.0 + 2.0 * params.gamma()) / 6.0;
  return {mean, 0.25 - mean * mean};
}

SpinStats analytic_pryce() { return {0.5, 0.0}; }

Matrix4 pryce_momentum_matrix(double theta_p, double phi_p) {
  const double ct = std::cos(theta_p), st = std::sin(theta_p);
  Matrix4 m;
  m(0, 0) = 0.5;
  m(1, 1) = -0.5;
  m(2, 2) = -0.5 + ct * ct;
  m(2, 3) = ct * st * std::polar(1.0, -phi_p);
  m(3, 2) = ct * st * std::polar(1.0, phi_p);
  m(3, 3) = 0.5 - ct * ct;
  return m;
}

double sommerfeld_energy(int n, int kappa, const HydrogenParams& params) {
  params.constants.validate();
  const double za = params.Z * params.constants.alpha_el();
  if (n < 1) throw DomainError("sommerfeld_energy: n must be >= 1");
  const int ka = std::abs(kappa);
  if (kappa == 0 || ka > n) throw DomainError("sommerfeld_energy: need |kappa| in 1..n");
  if (kappa == -n) throw DomainError("sommerfeld_energy: kappa = -n is not a bound state");
  if (!(za < ka)) throw DomainError("sommerfeld_energy: need Z alpha < |kappa|");
  const double den = n - ka + std::sqrt(double(kappa) * kappa - za * za);
  const double x = za / den;
  return params.constants.mc2() / std::sqrt(1.0 + x * x);
}

std::vector<double> superposition_spin_trace(const BoundState& s1, const BoundState& s2, cplx c1,
                                             cplx c2, spin::SpinKind kind,
                                             const PhysicalConstants& constants,
                                             const std::vector<double>& times,
                                             const QuadratureSpec& quad) {
  const double total = std::norm(c1) + std::norm(c2);
  if (std::abs(total - 1.0) > 1e-10)
    throw DomainError("superposition_spin_trace: need |c1|^2 + |c2|^2 = 1");

  const double scale = std::max(s1.radial_scale, s2.radial_scale);
  const Moments m11 = quadrature_moments(kind, s1.fn, s1.fn, constants, scale, quad, Exec::openmp);
  const Moments m22 = quadrature_moments(kind, s2.fn, s2.fn, constants, scale, quad, Exec::openmp);
  const Moments m12 = quadrature_moments(kind, s1.fn, s2.fn, constants, scale, quad, Exec::openmp);

  const double a1 = std::real(m11.s) / m11.norm_b;
  const double a2 = std::real(m22.s) / m22.norm_b;
  const cplx x12 = m12.s / std::sqrt(m11.norm_b * m22.norm_b);

  std::vector<double> out;
  out.reserve(times.size());
  const double de = s2.energy - s1.energy;
  for (const double t : times) {
    const cplx phase = std::polar(1.0, -de * t);
    out.push_back(std::norm(c1) * a1 + std::norm(c2) * a2 +
                  2.0 * std::real(std::conj(c1) * c2 * x12 * phase));
  }
  return out;
}

double zeeman_shift(const HydrogenParams& params, double B) {
  return B * params.constants.q / params.constants.m0 * analytic_pauli(params).mean;
}

} // namespace spinorlab::hyd
