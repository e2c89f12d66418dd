#include "spinorlab/dirac.hpp"

#include <cmath>

namespace spinorlab::dirac {

DiracMatrices build_dirac_matrices() {
  DiracMatrices d;
  const Mat2 z = Mat2::zero();
  const Mat2 id = Mat2::identity();
  for (int i = 0; i < 3; ++i) {
    const Mat2 s = Mat2::pauli(i);
    d.alpha[i] = Matrix4::from_blocks(z, s, s, z);
    d.sigma_big[i] = Matrix4::from_blocks(s, z, z, s);
  }
  d.beta = Matrix4::from_blocks(id, z, z, id * cplx(-1.0, 0.0));
  d.gamma5 = cplx(0.0, 1.0) * d.alpha[2] * d.alpha[1] * d.alpha[0];
  return d;
}

const DiracMatrices& matrices() {
  static const DiracMatrices d = build_dirac_matrices();
  return d;
}

double p0(const PhysicalConstants& k, const Momentum3& p) {
  return std::sqrt(k.mc() * k.mc() + p.norm2());
}

std::pair<TwoSpinor, TwoSpinor> chi_pair(const SpinDirection& n) {
  const double ch = std::cos(n.theta / 2.0);
  const double sh = std::sin(n.theta / 2.0);
  const cplx eip = std::polar(1.0, n.phi);
  const TwoSpinor up{ch, sh * eip};
  const TwoSpinor down{-sh * std::conj(eip), ch};
  return {up, down};
}

Spinor4 u_spinor(const PhysicalConstants& k, const TwoSpinor& chi, const Momentum3& p) {
  const double e = p0(k, p);
  const double den = k.mc() + e;
  const double f = std::sqrt(den / (2.0 * e));
  const TwoSpinor lower = Mat2::sigma_dot(p) * chi;
  return Spinor4::from_blocks({chi.a * f, chi.b * f}, {lower.a * f / den, lower.b * f / den});
}

Spinor4 v_spinor(const PhysicalConstants& k, const TwoSpinor& chi, const Momentum3& p) {
  const double e = p0(k, p);
  const double den = k.mc() + e;
  const double f = std::sqrt(den / (2.0 * e));
  const TwoSpinor upper = Mat2::sigma_dot(p) * chi;
  return Spinor4::from_blocks({-upper.a * f / den, -upper.b * f / den}, {chi.a * f, chi.b * f});
}

Matrix4 free_hamiltonian(const PhysicalConstants& k, const Momentum3& p) {
  return cplx(k.c, 0.0) * alpha_dot(p) + cplx(k.mc2(), 0.0) * matrices().beta;
}

Matrix4 energy_projector(const PhysicalConstants& k, const Momentum3& p, int sign) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double e = k.c * p0(k, p);
  return cplx(0.5, 0.0) * (Matrix4::identity() + cplx(s / e, 0.0) * free_hamiltonian(k, p));
}

PauliLubanski pauli_lubanski(const PhysicalConstants& k, const Momentum3& p) {
  PauliLubanski out;
  const Matrix4 h0 = free_hamiltonian(k, p);
  const auto& d = matrices();
  for (int i = 0; i < 3; ++i)
    out.W[i] = cplx(1.0 / (4.0 * k.c), 0.0) * anticommutator(h0, d.sigma_big[i]);
  out.W0 = cplx(0.5, 0.0) * sigma_dot_big(p);
  return out;
}

Matrix4 alpha_dot(const Momentum3& p) {
  const Mat2 sp = Mat2::sigma_dot(p);
  return Matrix4::from_blocks(Mat2::zero(), sp, sp, Mat2::zero());
}

Matrix4 sigma_dot_big(const Momentum3& p) {
  const Mat2 sp = Mat2::sigma_dot(p);
  return Matrix4::from_blocks(sp, Mat2::zero(), Mat2::zero(), sp);
}

std::array<Matrix4, 3> p_cross_alpha(const Momentum3& p) {
  const auto& a = matrices().alpha;
  return {cplx(p.y, 0) * a[2] - cplx(p.z, 0) * a[1],
          cplx(p.z, 0) * a[0] - cplx(p.x, 0) * a[2],
          cplx(p.x, 0) * a[1] - cplx(p.y, 0) * a[0]};
}

} // namespace spinorlab::dirac
