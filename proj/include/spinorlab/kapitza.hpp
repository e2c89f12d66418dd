#pragma once

#include <vector>

#include "spinorlab/constants.hpp"
#include "spinorlab/exec.hpp"
#include "spinorlab/matrix4.hpp"
#include "spinorlab/observables.hpp"

namespace spinorlab::kd {

struct LaserParams {
  double v0 = 0.0;          // ponderomotive amplitude (energy)
  Momentum3 k{};            // wave vector
  double t_end_periods = 0; // pulse duration in laser periods

  // photon angular frequency omega = c |k|, so T = 2 pi / (c |k|)
  double period(const PhysicalConstants& constants) const;
  double t_end(const PhysicalConstants& constants) const;
  void validate() const;
};

// Amplitudes c_n over the photon-momentum ladder p + n k, n in
// [-n_max, n_max], expressed in the free-spinor basis
// (u_chi_up, u_chi_down, v_chi_up, v_chi_down) at each site's momentum.
struct ModeLadder {
  int n_max = 0;
  Momentum3 base_p{};
  std::vector<cplx> amps; // 4 * (2 n_max + 1), site-major

  int sites() const { return 2 * n_max + 1; }
  cplx* site(int n) { return amps.data() + 4 * (n + n_max); }
  const cplx* site(int n) const { return amps.data() + 4 * (n + n_max); }
  double norm2() const;
};

// Time-independent part of the coupled equations i dc/dt = M(t) c:
// site-diagonal free energies +-c p0(p + n k), plus the cos^2 potential
// couplings n -> n, n +- 2, each dressed by the basis-overlap matrix between
// the free-spinor bases at the two momenta.
struct CouplingTensor {
  std::vector<std::array<double, 4>> energies; // per site
  std::vector<Matrix4> basis;                  // U_n, columns = basis spinors
  std::vector<Matrix4> overlap_up2;            // U_n^dag U_{n+2}, defined for n <= n_max-2

  int sites() const { return static_cast<int>(energies.size()); }
};

CouplingTensor build_coupling(const LaserParams& params, const PhysicalConstants& constants,
                              const Momentum3& base_p, const SpinDirection& spin_dir, int n_max);

struct KapitzaConfig {
  int n_max = 8;
  int steps_per_period = 4096;
  int sample_every = 64; // RK4 steps between observable rows
};

class KapitzaModel {
public:
  KapitzaModel(const LaserParams& params, const PhysicalConstants& constants,
               const Momentum3& base_p, const SpinDirection& spin_dir, int n_max);

  // all amplitudes zero except c_0 on u_chi_up
  ModeLadder initial_ladder() const;

  // i dc/dt with the sin^2 envelope applied to the potential block
  void rhs(double t, const std::vector<cplx>& c, std::vector<cplx>& dc, Exec exec) const;

  // classic RK4; throws StepTooLarge if a single step changes the norm by
  // more than 1e-6
  struct Sample {
    double t_over_period;
    wp::ObservableRow row;
  };
  std::vector<Sample> integrate(const KapitzaConfig& config, Exec exec = Exec::openmp) const;

  // spin expectations per kind plus <Lambda-> = sum |c^-|^2
  wp::ObservableRow observables(const ModeLadder& ladder, const SpinDirection& n, Exec exec) const;

  const CouplingTensor& coupling() const { return coupling_; }
  const LaserParams& laser() const { return params_; }

private:
  LaserParams params_;
  PhysicalConstants constants_;
  Momentum3 base_p_;
  SpinDirection spin_dir_;
  int n_max_;
  CouplingTensor coupling_;
  double t_end_;
};

} // namespace spinorlab::kd
