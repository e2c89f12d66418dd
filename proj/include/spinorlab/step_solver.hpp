#pragma once

#include <vector>

#include "spinorlab/observables.hpp"
#include "spinorlab/spinor_field.hpp"

namespace spinorlab::wp {

struct StepPotentialParams {
  double v0;        // barrier height (energy)
  double w;         // smoothing width (length)
};

// q phi(x, y) = (V0/2)(1 + tanh(x/w)); independent of y.
std::vector<double> build_step_potential(const StepPotentialParams& params, const Grid2D& grid);

struct GaussianPacketSpec {
  double spatial_width = 0.025; // position-density standard deviation per axis
  double x0 = -0.175;
  double y0 = 0.0;
  double px_mean = 0.0;
  double py_mean = 0.0;
  TwoSpinor chi{cplx(1.0 / std::sqrt(2.0), 0.0), cplx(0.0, 1.0 / std::sqrt(2.0))};
};

// Positive-energy Gaussian packet g(p) u_{chi,p}: unit L2 norm, <Lambda-> = 0
// by construction.  Throws PacketTooWide if the boundary tails exceed 1e-8.
SpinorField2D initial_packet(const GaussianPacketSpec& spec, const Grid2D& grid,
                             const PhysicalConstants& constants, Exec exec = Exec::openmp);

// Strang splitting: half potential phase, exact kinetic step
// e^{-i H0(p) dt} = cos(c p0 dt) - i sin(c p0 dt) H0(p)/(c p0), half potential
// phase.  Tables are precomputed per (potential, dt).
class SplitStepPropagator {
public:
  SplitStepPropagator(const Grid2D& grid, const std::vector<double>& potential_qphi,
                      const PhysicalConstants& constants, double dt, Exec exec = Exec::openmp);

  void step(SpinorField2D& field) const; // position rep in, position rep out
  double dt() const { return dt_; }

private:
  Grid2D grid_;
  PhysicalConstants constants_;
  double dt_;
  Exec exec_;
  std::vector<cplx> half_phase_;  // e^{-i q phi dt / 2}
  std::vector<double> kin_cos_;   // cos(c p0 dt)
  std::vector<double> kin_sinc_;  // sin(c p0 dt) / (c p0)
};

// One-off step for callers that do not keep a propagator around.
void split_step(SpinorField2D& field, const std::vector<double>& potential_qphi,
                const PhysicalConstants& constants, double dt, Exec exec = Exec::openmp);

struct PropagationConfig {
  double dt = 1e-6;
  int n_steps = 3500;
  int sample_every = 10;

  void validate() const {
    if (!(dt > 0.0)) throw ConfigError("PropagationConfig: dt must be positive");
    if (n_steps < 0 || sample_every < 1) throw ConfigError("PropagationConfig: bad step counts");
  }
};

// The full scattering scenario: build potential and packet, propagate, and
// sample observables (spin direction y) every sample_every steps.  Asserts
// at runtime that no probability reaches the grid boundary.
std::vector<ObservableRow> run_step_scenario(const Grid2D& grid, const GaussianPacketSpec& spec,
                                             const StepPotentialParams& params,
                                             const PropagationConfig& config,
                                             const PhysicalConstants& constants,
                                             Exec exec = Exec::openmp);

} // namespace spinorlab::wp
