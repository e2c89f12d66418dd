#pragma once

#include <utility>

#include "spinorlab/constants.hpp"
#include "spinorlab/matrix4.hpp"

namespace spinorlab::dirac {

// The Dirac-representation matrix algebra: alpha_i, beta, the block-diagonal
// Sigma_i = -i alpha_j alpha_k (cyclic), and gamma5 = i alpha_3 alpha_2 alpha_1.
struct DiracMatrices {
  std::array<Matrix4, 3> alpha;
  Matrix4 beta;
  std::array<Matrix4, 3> sigma_big;
  Matrix4 gamma5;
};

DiracMatrices build_dirac_matrices();

// Cached singleton; the matrices are immutable after construction.
const DiracMatrices& matrices();

// Scaled positive energy p0 = sqrt(m0^2 c^2 + |p|^2).
double p0(const PhysicalConstants& k, const Momentum3& p);

// Eigenvectors chi_up / chi_down of n.sigma with eigenvalues +1 / -1.
std::pair<TwoSpinor, TwoSpinor> chi_pair(const SpinDirection& n);

// Free plane-wave spinor amplitudes; H0(p) u = +c p0 u and H0(p) v = -c p0 v.
Spinor4 u_spinor(const PhysicalConstants& k, const TwoSpinor& chi, const Momentum3& p);
Spinor4 v_spinor(const PhysicalConstants& k, const TwoSpinor& chi, const Momentum3& p);

// H0(p) = c alpha.p + m0 c^2 beta.
Matrix4 free_hamiltonian(const PhysicalConstants& k, const Momentum3& p);

// Lambda(+/-) = (1 +/- H0/(c p0)) / 2; sign is +1 or -1.
Matrix4 energy_projector(const PhysicalConstants& k, const Momentum3& p, int sign);

// Pauli-Lubanski vector W = (H0 Sigma + Sigma H0)/(4c) and W0 = p.Sigma/2.
struct PauliLubanski {
  std::array<Matrix4, 3> W;
  Matrix4 W0;
};
PauliLubanski pauli_lubanski(const PhysicalConstants& k, const Momentum3& p);

// alpha.p helper used across the spin-operator constructions.
Matrix4 alpha_dot(const Momentum3& p);
// Sigma.p
Matrix4 sigma_dot_big(const Momentum3& p);
// (p x alpha)_i triplet
std::array<Matrix4, 3> p_cross_alpha(const Momentum3& p);

} // namespace spinorlab::dirac
