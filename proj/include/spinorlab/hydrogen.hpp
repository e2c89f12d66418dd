#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spinorlab/constants.hpp"
#include "spinorlab/exec.hpp"
#include "spinorlab/matrix4.hpp"
#include "spinorlab/special_functions.hpp"
#include "spinorlab/spin_operators.hpp"

namespace spinorlab::hyd {

struct HydrogenParams {
  double Z = 1.0;
  PhysicalConstants constants;
  int two_m = +1; // magnetic quantum number 2m of the ground state, +1 or -1

  double gamma() const;       // sqrt(1 - Z^2 alpha^2)
  double norm_factor() const; // (2 m0 Z)^(3/2) sqrt((1+gamma)/(2 Gamma(1+2 gamma)))
  void validate() const;      // requires 0 < Z alpha < 1 and two_m in {-1, +1}
};

using PositionSpinorFn = std::function<Spinor4(double r, double theta, double phi)>;

struct MomentumSpinorFn {
  std::function<Spinor4(double p, double theta, double phi)> fn;
  std::string label;

  Spinor4 operator()(double p, double theta, double phi) const { return fn(p, theta, phi); }
};

// The degenerate hydrogenic ground state in position space (r > 0) and its
// exact momentum-space representation built from the J_0 / J_1 moments.
PositionSpinorFn ground_state_position(const HydrogenParams& params);
MomentumSpinorFn ground_state_momentum(const HydrogenParams& params);

// Structural bound-state templates for a spherically symmetric potential:
// the two kappa-manifold spinor forms with caller-supplied radial functions.
// kappa > 0 selects the (j + 1/2) manifold, kappa < 0 the -(j + 1/2) one.
// two_j and two_m are 2j and 2m (half-integers doubled to stay exact).
PositionSpinorFn bound_template_position(int kappa, int two_j, int two_m, RadialFn g, RadialFn f);
MomentumSpinorFn bound_template_momentum(int kappa, int two_j, int two_m, ComplexRadialFn g_t,
                                         ComplexRadialFn f_t);

struct QuadratureSpec {
  int n_radial = 256;
  int n_theta = 64;
  int n_phi = 64;

  void validate() const; // node counts >= 8
};

struct SpinStats {
  double mean;
  double variance;
};

// <S_3> and Var(S_3) of a momentum-space state by quadrature over
// (p, theta', phi'), applying the kind's momentum-space matrix pointwise.
// The radial map p = m0 Z u/(1-u) concentrates nodes at the bound-state
// momentum scale.
SpinStats spin_statistics(spin::SpinKind kind, const HydrogenParams& params,
                          const QuadratureSpec& quad = {}, Exec exec = Exec::openmp);

// Same quadrature machinery for an arbitrary momentum-space state (used for
// cross matrix elements and superpositions); radial_scale sets the u-map.
SpinStats spin_statistics_state(spin::SpinKind kind, const MomentumSpinorFn& state,
                                const PhysicalConstants& constants, double radial_scale,
                                const QuadratureSpec& quad = {}, Exec exec = Exec::openmp);

// Closed forms: Pauli mean (1 + 2 gamma)/6 with its variance, and the Pryce
// pair (1/2, 0).
SpinStats analytic_pauli(const HydrogenParams& params);
SpinStats analytic_pryce();

// Momentum-space Pryce S_3; depends only on the momentum direction.
Matrix4 pryce_momentum_matrix(double theta_p, double phi_p);

// Sommerfeld fine-structure energy E(n, kappa).
double sommerfeld_energy(int n, int kappa, const HydrogenParams& params);

struct BoundState {
  MomentumSpinorFn fn;
  double energy;
  double radial_scale; // u-map scale for quadratures involving this state
};

// <S_3>(t) of c1 psi1 e^{-i E1 t} + c2 psi2 e^{-i E2 t}; constant in t when
// both states are eigenstates of the kind's S_3.
std::vector<double> superposition_spin_trace(const BoundState& s1, const BoundState& s2, cplx c1,
                                             cplx c2, spin::SpinKind kind,
                                             const PhysicalConstants& constants,
                                             const std::vector<double>& times,
                                             const QuadratureSpec& quad = {});

// Anomalous Zeeman shift of the m = +1/2 ground state in a weak field B.
double zeeman_shift(const HydrogenParams& params, double B);

} // namespace spinorlab::hyd
