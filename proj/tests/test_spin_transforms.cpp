#include <doctest.h>

#include <cmath>

#include "spinorlab/algebra_check.hpp"
#include "spinorlab/spin_operators.hpp"

using namespace spinorlab;
using spin::SpinKind;

namespace {
const PhysicalConstants kUnit{1.0, 1.0, -1.0};
const PhysicalConstants kAtomic{};
} // namespace

TEST_SUITE_BEGIN("spin_transforms");

TEST_CASE("Foldy-Wouthuysen transform") {
  CHECK(relative_residual(spin::transform_fw(kUnit, {}), Matrix4::identity()) < 1e-15);
  for (const auto& s : spin::sample_momenta(kAtomic, 15, 41)) {
    const Matrix4 t = spin::transform_fw(kAtomic, s.p);
    CHECK(relative_residual(t * t.dagger(), Matrix4::identity()) < 1e-12);
    const Matrix4 h0 = dirac::free_hamiltonian(kAtomic, s.p);
    const double e = kAtomic.c * dirac::p0(kAtomic, s.p);
    CHECK(relative_residual(t.dagger() * h0 * t, cplx(e, 0) * dirac::matrices().beta) < 1e-12);
    // maps the Pauli operator onto the FW operator
    const auto fw = spin::spin_matrices(SpinKind::FoldyWouthuysen, kAtomic, s.p);
    const auto pauli = spin::spin_matrices(SpinKind::Pauli, kAtomic, s.p);
    for (int i = 0; i < 3; ++i)
      CHECK(relative_residual(t * pauli.S[i] * t.dagger(), fw.S[i]) < 1e-12);
  }
}

TEST_CASE("Chakrabarti transform") {
  const auto [t0, t0_inv] = spin::transform_ch(kUnit, {});
  CHECK(relative_residual(t0, Matrix4::identity()) < 1e-15);

  for (const auto& s : spin::sample_momenta(kUnit, 15, 43)) {
    const auto [t, t_inv] = spin::transform_ch(kUnit, s.p);
    CHECK(relative_residual(t * t_inv, Matrix4::identity()) < 1e-12);
    const auto& beta = dirac::matrices().beta;
    CHECK(relative_residual(t.dagger(), beta * t_inv * beta) < 1e-12);

    // T H0 T^-1 - c beta p0 is the strictly lower-block matrix 2c sigma.p
    const Matrix4 h0 = dirac::free_hamiltonian(kUnit, s.p);
    const double e = kUnit.c * dirac::p0(kUnit, s.p);
    const Matrix4 h = t * h0 * t_inv - cplx(e, 0) * beta;
    const Matrix4 expected = cplx(2.0 * kUnit.c, 0) *
                             Matrix4::from_blocks(Mat2::zero(), Mat2::zero(),
                                                  Mat2::sigma_dot(s.p), Mat2::zero());
    CHECK(relative_residual(h, expected) < 1e-12);
  }
}

TEST_CASE("Pryce transform") {
  SUBCASE("p along z: lower block is i sigma_3") {
    const Matrix4 t = spin::transform_pr({0, 0, 2.5});
    CHECK(std::abs(t(2, 2) - cplx(0, 1)) < 1e-15);
    CHECK(std::abs(t(3, 3) - cplx(0, -1)) < 1e-15);
    CHECK(std::abs(t(2, 3)) + std::abs(t(3, 2)) < 1e-15);
  }
  for (const auto& s : spin::sample_momenta(kUnit, 15, 47)) {
    const Matrix4 t = spin::transform_pr(s.p);
    CHECK(relative_residual(t * t.dagger(), Matrix4::identity()) < 1e-13);
    const auto pauli = spin::spin_matrices(SpinKind::Pauli, kUnit, s.p);
    const auto pryce = spin::spin_matrices(SpinKind::Pryce, kUnit, s.p);
    for (int i = 0; i < 3; ++i)
      CHECK(relative_residual(t * pauli.S[i] * t.dagger(), pryce.S[i]) < 1e-12);
    // T^-1 H0 T = (m c^2 - i gamma5 c |p|) beta
    const Matrix4 h0 = dirac::free_hamiltonian(kUnit, s.p);
    const auto& d = dirac::matrices();
    const Matrix4 rhs = (cplx(kUnit.mc2(), 0) * Matrix4::identity() -
                         cplx(0, kUnit.c * s.p.norm()) * d.gamma5) * d.beta;
    CHECK(relative_residual(t.dagger() * h0 * t, rhs) < 1e-12);
  }
}

TEST_CASE("all published forms of each operator agree") {
  for (const auto& s : spin::sample_momenta(kAtomic, 30, 53)) {
    const auto rep = spin::equivalent_forms_report(kAtomic, s.p);
    for (const auto& e : rep.entries) {
      CAPTURE(e.name);
      CHECK(e.residual < e.tol);
    }
  }
}

TEST_CASE("aggregated algebra check passes at both unit systems") {
  for (const PhysicalConstants& k : {kUnit, kAtomic}) {
    const auto result = spin::run_algebra_check(k, 25, 0);
    for (const auto& e : result.entries) {
      CAPTURE(e.name);
      CHECK(e.pass);
    }
  }
}

TEST_SUITE_END();
