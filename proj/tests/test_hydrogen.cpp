#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/hydrogen.hpp"
#include "spinorlab/quadrature.hpp"

using namespace spinorlab;
using spin::SpinKind;

namespace {

const PhysicalConstants kAtomic{};

// L2 norm^2 of a momentum-space spinor state over (p, theta, phi)
double state_norm2(const hyd::MomentumSpinorFn& state, double scale, int nr = 200, int nt = 24,
                   int nf = 24) {
  const auto radial = gauss_legendre_01(nr);
  const auto& ang = gauss_legendre(nt);
  double total = 0.0;
  for (int iu = 0; iu < nr; ++iu) {
    const double u = radial.x[iu];
    const double p = scale * u / (1.0 - u);
    const double jac = scale / ((1.0 - u) * (1.0 - u));
    for (int it = 0; it < nt; ++it) {
      const double theta = std::acos(ang.nodes[it]);
      for (int ip = 0; ip < nf; ++ip) {
        const double phi = 2.0 * M_PI * ip / nf;
        total += radial.w[iu] * jac * p * p * ang.weights[it] * (2.0 * M_PI / nf) *
                 state(p, theta, phi).norm2();
      }
    }
  }
  return total;
}

const hyd::QuadratureSpec kLightQuad{128, 32, 32};

} // namespace

TEST_SUITE_BEGIN("hydrogen");

TEST_CASE("ground state in position space") {
  SUBCASE("unit L2 norm at Z = 92") {
    const hyd::HydrogenParams params{92.0, kAtomic, +1};
    const auto psi = hyd::ground_state_position(params);
    // angular parts integrate in closed form once the radial profile is
    // squared; do the full 3D quadrature anyway as an oracle
    const auto& ang = gauss_legendre(16);
    const double decay = 2.0 * kAtomic.m0 * params.Z;
    double total = 0.0;
    for (int it = 0; it < 16; ++it) {
      const double theta = std::acos(ang.nodes[it]);
      for (int ip = 0; ip < 16; ++ip) {
        const double phi = 2.0 * M_PI * ip / 16;
        total += ang.weights[it] * (2.0 * M_PI / 16) *
                 oracles::integral_0_inf(
                     [&](double r) {
                       return r <= 0.0 ? 0.0 : r * r * psi(r, theta, phi).norm2();
                     },
                     decay, 1e-12);
      }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  }
  SUBCASE("lower components vanish in the nonrelativistic limit") {
    const hyd::HydrogenParams light{0.5, kAtomic, +1};
    const auto psi = hyd::ground_state_position(light);
    const Spinor4 v = psi(1.0, 0.9, 0.4);
    const double upper = std::abs(v[0]);
    const double lower = std::sqrt(std::norm(v[2]) + std::norm(v[3]));
    const double za = light.Z * kAtomic.alpha_el();
    CHECK(lower / upper < za); // ratio ~ (1 - gamma)/(Z alpha) ~ Z alpha / 2
  }
  SUBCASE("m = -1/2 partner has the mirrored component pattern") {
    const hyd::HydrogenParams up{70.0, kAtomic, +1};
    const hyd::HydrogenParams dn{70.0, kAtomic, -1};
    const auto pu = hyd::ground_state_position(up);
    const auto pd = hyd::ground_state_position(dn);
    const double r = 0.01, th = 1.1, ph = 0.7;
    const Spinor4 vu = pu(r, th, ph);
    const Spinor4 vd = pd(r, th, ph);
    CHECK(std::abs(vu[1]) == 0.0);
    CHECK(std::abs(vd[0]) == 0.0);
    CHECK(std::abs(vd[1] - vu[0]) < 1e-15);            // same Y00 radial part
    CHECK(std::abs(vd[3] + vu[2]) < 1e-15);            // -Y10 vs +Y10 slot
  }
}

TEST_CASE("ground state in momentum space") {
  const hyd::HydrogenParams params{92.0, kAtomic, +1};
  const auto tilde = hyd::ground_state_momentum(params);
  const double scale = kAtomic.m0 * params.Z;

  SUBCASE("Parseval: unit norm") {
    CHECK(state_norm2(tilde, scale) == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("matches the numeric spherical transform of the position state") {
    const auto psi = hyd::ground_state_position(params);
    // extract the radial profiles from the position state itself
    const double th0 = 0.6, ph0 = 1.3;
    const cplx y00 = hyd::sph_harmonic(0, 0, th0, ph0);
    const cplx y10 = hyd::sph_harmonic(1, 0, th0, ph0);
    const auto r_g = [&](double r) { return std::real(psi(r, th0, ph0)[0] / y00); };
    const auto r_f = [&](double r) {
      // the template writes component 2 as -i f(r) sqrt(1/3) Y10
      return std::real(psi(r, th0, ph0)[2] / (cplx(0, -1) * std::sqrt(1.0 / 3.0) * y10));
    };
    const auto g_t = hyd::transform_radial(0, r_g, -1, {512, 1.0 / scale});
    const auto f_t = hyd::transform_radial(1, r_f, -1, {512, 1.0 / scale});
    const auto numeric = hyd::bound_template_momentum(1, 1, 1, g_t, f_t);
    for (const double p : {0.3 * scale, scale, 3.0 * scale}) {
      const Spinor4 a = tilde(p, 0.8, 2.0);
      const Spinor4 b = numeric(p, 0.8, 2.0);
      CHECK((a - b).norm() < 1e-6 * std::max(1.0, a.norm()));
    }
  }
  SUBCASE("angular content: upper is pure Y00, lower is pure l = 1") {
    // the first component must be independent of the angles
    const double p = 0.7 * scale;
    CHECK(std::abs(tilde(p, 0.3, 0.1)[0] - tilde(p, 2.2, 4.0)[0]) < 1e-15);
    // component 1 vanishes for m = +1/2
    CHECK(std::abs(tilde(p, 1.0, 2.0)[1]) == 0.0);
  }
  SUBCASE("template reproduction with closed-form radial moments") {
    const double g = params.gamma();
    const double n = params.norm_factor();
    const double pre = (1.0 - g) / (params.Z * kAtomic.alpha_el());
    const auto gt = [=](double p) { return cplx(n * hyd::special_J(0, scale, g, p), 0); };
    const auto ft = [=](double p) { return cplx(0, n * pre * hyd::special_J(1, scale, g, p)); };
    const auto templ = hyd::bound_template_momentum(1, 1, 1, gt, ft);
    const Spinor4 a = tilde(scale, 1.2, 0.4);
    const Spinor4 b = templ(scale, 1.2, 0.4);
    CHECK((a - b).norm() < 1e-14);
  }
}

TEST_CASE("Pryce momentum-space matrix") {
  SUBCASE("theta = 0 is diagonal (1/2, -1/2, 1/2, -1/2)") {
    const Matrix4 m = hyd::pryce_momentum_matrix(0.0, 0.0);
    CHECK(relative_residual(m, Matrix4::diagonal(0.5, -0.5, 0.5, -0.5)) < 1e-15);
  }
  SUBCASE("agrees with the spin-operator module at any momentum magnitude") {
    for (const double mag : {0.3, 2.0, 50.0}) {
      const double th = 1.17, ph = 2.9;
      const Momentum3 p = Momentum3{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                                    std::cos(th)} * mag;
      const Matrix4 a = hyd::pryce_momentum_matrix(th, ph);
      const Matrix4 b = spin::spin_component(SpinKind::Pryce, kAtomic, p, SpinDirection::z_axis());
      CHECK(relative_residual(a, b) < 1e-13);
    }
  }
  SUBCASE("ground state is a pointwise eigenstate with eigenvalue m") {
    const hyd::HydrogenParams params{92.0, kAtomic, +1};
    const auto tilde = hyd::ground_state_momentum(params);
    for (const double th : {0.2, 1.3, 2.9}) {
      for (const double ph : {0.0, 2.2}) {
        const double p = 40.0;
        const Spinor4 v = tilde(p, th, ph);
        const Spinor4 r = hyd::pryce_momentum_matrix(th, ph) * v;
        CHECK((r - v * cplx(0.5, 0)).norm() < 1e-10 * v.norm());
      }
    }
  }
}

TEST_CASE("spin statistics by quadrature") {
  SUBCASE("Pryce: mean exactly 1/2, zero variance") {
    const hyd::HydrogenParams params{92.0, kAtomic, +1};
    const auto stats = hyd::spin_statistics(SpinKind::Pryce, params, kLightQuad);
    CHECK(std::abs(stats.mean - 0.5) < 1e-8);
    CHECK(std::abs(stats.variance) < 1e-8);
  }
  SUBCASE("Pauli matches the closed form at Z = 1 and Z = 92") {
    for (const double z : {1.0, 92.0}) {
      const hyd::HydrogenParams params{z, kAtomic, +1};
      const auto stats = hyd::spin_statistics(SpinKind::Pauli, params, kLightQuad);
      const auto closed = hyd::analytic_pauli(params);
      CHECK(std::abs(stats.mean - closed.mean) < 1e-6);
      CHECK(std::abs(stats.variance - closed.variance) < 1e-6);
    }
  }
  SUBCASE("measurement probabilities at Z = 92") {
    const hyd::HydrogenParams params{92.0, kAtomic, +1};
    const double p_pauli =
        0.5 + hyd::spin_statistics(SpinKind::Pauli, params, kLightQuad).mean;
    const double p_fw =
        0.5 + hyd::spin_statistics(SpinKind::FoldyWouthuysen, params, kLightQuad).mean;
    CHECK(p_pauli == doctest::Approx(0.914).epsilon(1.2e-3));
    CHECK(p_fw == doctest::Approx(0.998).epsilon(1.2e-3));
  }
  SUBCASE("symmetry between the two degenerate states") {
    const hyd::HydrogenParams up{92.0, kAtomic, +1};
    const hyd::HydrogenParams dn{92.0, kAtomic, -1};
    for (SpinKind kind : {SpinKind::Pauli, SpinKind::Frenkel, SpinKind::Chakrabarti}) {
      const auto su = hyd::spin_statistics(kind, up, kLightQuad);
      const auto sd = hyd::spin_statistics(kind, dn, kLightQuad);
      CHECK(su.mean == doctest::Approx(-sd.mean).epsilon(1e-8));
      CHECK(su.variance == doctest::Approx(sd.variance).epsilon(1e-8));
    }
  }
  SUBCASE("small Z: every operator gives about 1/2") {
    const hyd::HydrogenParams params{10.0, kAtomic, +1};
    for (SpinKind kind : spin::all_spin_kinds) {
      const auto stats = hyd::spin_statistics(kind, params, kLightQuad);
      CHECK(std::abs(stats.mean - 0.5) < 0.01);
    }
  }
  SUBCASE("ordering at Z = 92: Frenkel above 1/2, Pryce at 1/2, the rest below") {
    const hyd::HydrogenParams params{92.0, kAtomic, +1};
    for (SpinKind kind : spin::all_spin_kinds) {
      const double mean = hyd::spin_statistics(kind, params, kLightQuad).mean;
      CAPTURE(spin::to_string(kind));
      if (kind == SpinKind::Frenkel)
        CHECK(mean > 0.5);
      else if (kind == SpinKind::Pryce)
        CHECK(std::abs(mean - 0.5) < 1e-8);
      else
        CHECK(mean < 0.5);
    }
  }
  SUBCASE("doubling every node count moves the result by < 1e-7") {
    const hyd::HydrogenParams params{92.0, kAtomic, +1};
    const auto coarse = hyd::spin_statistics(SpinKind::Pauli, params, {128, 32, 32});
    const auto fine = hyd::spin_statistics(SpinKind::Pauli, params, {256, 64, 64});
    CHECK(std::abs(coarse.mean - fine.mean) < 1e-7);
    CHECK(std::abs(coarse.variance - fine.variance) < 1e-7);
  }
}

TEST_CASE("analytic closed forms") {
  SUBCASE("nonrelativistic limit") {
    const hyd::HydrogenParams params{1e-6, kAtomic, +1};
    const auto stats = hyd::analytic_pauli(params);
    CHECK(stats.mean == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(stats.variance == doctest::Approx(0.0).epsilon(1e-10));
  }
  SUBCASE("Z = 92 reference value") {
    const hyd::HydrogenParams params{92.0, kAtomic, +1};
    CHECK(hyd::analytic_pauli(params).mean == doctest::Approx(0.4137).epsilon(2e-4));
  }
  CHECK(hyd::analytic_pryce().mean == 0.5);
  CHECK(hyd::analytic_pryce().variance == 0.0);
}

TEST_CASE("Sommerfeld energies") {
  const hyd::HydrogenParams params{80.0, kAtomic, +1};
  SUBCASE("free limit as Z -> 0") {
    const hyd::HydrogenParams tiny{1e-8, kAtomic, +1};
    CHECK(hyd::sommerfeld_energy(1, 1, tiny) ==
          doctest::Approx(kAtomic.mc2()).epsilon(1e-12));
  }
  SUBCASE("ground state closed form m0 c^2 gamma") {
    CHECK(hyd::sommerfeld_energy(1, 1, params) ==
          doctest::Approx(kAtomic.mc2() * params.gamma()).epsilon(1e-14));
  }
  SUBCASE("monotone in n") {
    CHECK(hyd::sommerfeld_energy(2, 1, params) > hyd::sommerfeld_energy(1, 1, params));
    CHECK(hyd::sommerfeld_energy(3, 1, params) > hyd::sommerfeld_energy(2, 1, params));
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(hyd::sommerfeld_energy(1, -1, params), DomainError); // kappa = -n
    CHECK_THROWS_AS(hyd::sommerfeld_energy(1, 2, params), DomainError);  // |kappa| > n
    CHECK_THROWS_AS(hyd::sommerfeld_energy(2, 0, params), DomainError);
    const hyd::HydrogenParams heavy{136.9, kAtomic, +1};
    CHECK_NOTHROW(hyd::sommerfeld_energy(1, 1, heavy));
  }
}

TEST_CASE("superposition spin trace") {
  const double z = 60.0;
  const hyd::HydrogenParams params{z, kAtomic, +1};
  const double scale = kAtomic.m0 * z;
  const hyd::QuadratureSpec quad{96, 24, 24};

  const hyd::BoundState ground{hyd::ground_state_momentum(params),
                               hyd::sommerfeld_energy(1, 1, params), scale};

  // synthetic kappa = 1 companion built directly in momentum space: smooth
  // analytic decayers with the same angular template, orthogonalized against
  // the ground state the way a true excited eigenstate would be
  const double gam = params.gamma();
  const double nfac = params.norm_factor();
  const double pre = (1.0 - gam) / (params.Z * kAtomic.alpha_el());
  const auto g_gs = [=](double p) { return cplx(nfac * hyd::special_J(0, scale, gam, p), 0); };
  const auto f_gs = [=](double p) {
    return cplx(0, nfac * pre * hyd::special_J(1, scale, gam, p));
  };
  const auto g_raw = [=](double p) {
    const double x = p / scale;
    return cplx(1.0 / ((1.0 + x * x) * (1.0 + x * x)), 0.0);
  };
  const auto f_raw = [=](double p) {
    const double x = p / scale;
    return cplx(0.0, -0.2 * x / std::pow(1.0 + x * x, 2.5));
  };
  // radial inner products <a|b> = int (ga* gb + fa* fb) p^2 dp
  const auto radial_dot = [&](const hyd::ComplexRadialFn& ga, const hyd::ComplexRadialFn& fa,
                              const hyd::ComplexRadialFn& gb, const hyd::ComplexRadialFn& fb) {
    const auto rule = gauss_legendre_01(400);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double u = rule.x[i];
      const double p = scale * u / (1.0 - u);
      const double w = rule.w[i] * scale / ((1.0 - u) * (1.0 - u)) * p * p;
      acc += w * (std::conj(ga(p)) * gb(p) + std::conj(fa(p)) * fb(p));
    }
    return acc;
  };
  const cplx proj = radial_dot(g_gs, f_gs, g_raw, f_raw) / radial_dot(g_gs, f_gs, g_gs, f_gs);
  const auto g2 = [=](double p) { return g_raw(p) - proj * g_gs(p); };
  const auto f2 = [=](double p) { return f_raw(p) - proj * f_gs(p); };
  const hyd::BoundState excited{hyd::bound_template_momentum(1, 1, 1, g2, f2),
                                hyd::sommerfeld_energy(2, 1, params), scale};

  const double de = std::abs(excited.energy - ground.energy);
  const double period = 2.0 * M_PI / de;
  std::vector<double> times;
  for (int i = 0; i <= 20; ++i) times.push_back(period * i / 10.0);

  const cplx c1 = std::sqrt(0.6), c2 = std::sqrt(0.4);

  SUBCASE("Pryce trace is constant for two extremal-m states") {
    const auto trace =
        hyd::superposition_spin_trace(ground, excited, c1, c2, SpinKind::Pryce, kAtomic, times, quad);
    for (const double v : trace) CHECK(v == doctest::Approx(0.5).epsilon(1e-7));
  }
  SUBCASE("Pauli trace oscillates with period 2 pi / |E1 - E2|") {
    const auto trace =
        hyd::superposition_spin_trace(ground, excited, c1, c2, SpinKind::Pauli, kAtomic, times, quad);
    // nonconstant, but exactly periodic: entries 0 and 10 are one period apart
    double lo = trace[0], hi = trace[0];
    for (const double v : trace) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    CHECK(hi - lo > 1e-4);
    CHECK(trace[0] == doctest::Approx(trace[10]).epsilon(1e-10));
    CHECK(trace[3] == doctest::Approx(trace[13]).epsilon(1e-10));
  }
  SUBCASE("c2 = 0 reduces to the stationary expectation") {
    const auto trace =
        hyd::superposition_spin_trace(ground, excited, 1.0, 0.0, SpinKind::Pauli, kAtomic, times, quad);
    const double expected = hyd::analytic_pauli(params).mean;
    for (const double v : trace) CHECK(v == doctest::Approx(expected).epsilon(1e-6));
  }
  SUBCASE("non-unit weights rejected") {
    CHECK_THROWS_AS(hyd::superposition_spin_trace(ground, excited, 1.0, 1.0, SpinKind::Pauli,
                                                  kAtomic, times, quad),
                    DomainError);
  }
}

TEST_CASE("anomalous Zeeman shift") {
  const hyd::HydrogenParams params{92.0, kAtomic, +1};
  CHECK(hyd::zeeman_shift(params, 0.0) == 0.0);
  SUBCASE("nonrelativistic limit is B q / (2 m0)") {
    const hyd::HydrogenParams tiny{1e-8, kAtomic, +1};
    const double b = 0.3;
    CHECK(hyd::zeeman_shift(tiny, b) ==
          doctest::Approx(b * kAtomic.q / (2.0 * kAtomic.m0)).epsilon(1e-12));
  }
  SUBCASE("ratio to B q / m0 equals the quadrature mean") {
    const double b = 1.7;
    const double ratio = hyd::zeeman_shift(params, b) / (b * kAtomic.q / kAtomic.m0);
    const auto stats = hyd::spin_statistics(SpinKind::Pauli, params, kLightQuad);
    CHECK(ratio == doctest::Approx(stats.mean).epsilon(1e-6));
  }
}

TEST_SUITE_END();
