#include "spinorlab/step_solver.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>

#include "spinorlab/dirac.hpp"

namespace spinorlab::wp {

std::vector<double> build_step_potential(const StepPotentialParams& params, const Grid2D& grid) {
  if (!(params.w > 0.0)) throw ConfigError("step potential: smoothing width must be positive");
  std::vector<double> v(grid.size());
  for (int ix = 0; ix < grid.nx; ++ix) {
    const double vx = 0.5 * params.v0 * (1.0 + std::tanh(grid.x(ix) / params.w));
    for (int iy = 0; iy < grid.ny; ++iy) v[grid.index(ix, iy)] = vx;
  }
  return v;
}

SpinorField2D initial_packet(const GaussianPacketSpec& spec, const Grid2D& grid,
                             const PhysicalConstants& constants, Exec exec) {
  if (!(spec.spatial_width > 0.0)) throw ConfigError("packet: spatial width must be positive");
  if (std::abs(spec.chi.norm() - 1.0) > 1e-12) throw ConfigError("packet: chi must be unit norm");

  // position-density std sigma_x per axis <-> momentum-space weight
  // exp(-(p - pbar)^2 / (4 sigma_p^2)) with sigma_p = 1/(2 sigma_x)
  const double sigma_p = 1.0 / (2.0 * spec.spatial_width);
  SpinorField2D f(grid, Rep::momentum);

  const auto body = [&](int ix) {
    for (int iy = 0; iy < grid.ny; ++iy) {
      const long idx = grid.index(ix, iy);
      const Momentum3 p{grid.px(ix), grid.py(iy), 0.0};
      const double dx = p.x - spec.px_mean;
      const double dy = p.y - spec.py_mean;
      const double mag = std::exp(-(dx * dx + dy * dy) / (4.0 * sigma_p * sigma_p));
      const cplx g = std::polar(mag, -(p.x * spec.x0 + p.y * spec.y0));
      f.set(idx, g * dirac::u_spinor(constants, spec.chi, p));
    }
  };
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (int ix = 0; ix < grid.nx; ++ix) body(ix);
  } else {
    for (int ix = 0; ix < grid.nx; ++ix) body(ix);
  }

  f.scale(cplx(1.0 / f.norm(), 0.0));
  f.to_position(exec);
  const double tail = boundary_ring_fraction(f);
  if (tail > 1e-8)
    throw PacketTooWide("packet tails reach the boundary: ring fraction = " +
                        std::to_string(tail));
  return f;
}

SplitStepPropagator::SplitStepPropagator(const Grid2D& grid,
                                         const std::vector<double>& potential_qphi,
                                         const PhysicalConstants& constants, double dt, Exec exec)
    : grid_(grid), constants_(constants), dt_(dt), exec_(exec) {
  if (dt == 0.0) throw ConfigError("split step: dt must be nonzero");
  if (static_cast<long>(potential_qphi.size()) != grid.size())
    throw ConfigError("split step: potential size does not match grid");
  const long n = grid_.size();
  half_phase_.resize(n);
  kin_cos_.resize(n);
  kin_sinc_.resize(n);
  for (long idx = 0; idx < n; ++idx) half_phase_[idx] = std::polar(1.0, -potential_qphi[idx] * dt / 2.0);
  for (int ix = 0; ix < grid_.nx; ++ix)
    for (int iy = 0; iy < grid_.ny; ++iy) {
      const long idx = grid_.index(ix, iy);
      const Momentum3 p{grid_.px(ix), grid_.py(iy), 0.0};
      const double e = constants_.c * dirac::p0(constants_, p);
      kin_cos_[idx] = std::cos(e * dt);
      kin_sinc_[idx] = std::sin(e * dt) / e;
    }
}

namespace {

void apply_scalar_phase(SpinorField2D& f, const std::vector<cplx>& phase, Exec exec) {
  const Grid2D& g = f.grid();
  cplx* c0 = f.component(0);
  cplx* c1 = f.component(1);
  cplx* c2 = f.component(2);
  cplx* c3 = f.component(3);
  const auto body = [&](int ix) {
    const long base = g.index(ix, 0);
    for (int iy = 0; iy < g.ny; ++iy) {
      const cplx ph = phase[base + iy];
      c0[base + iy] *= ph;
      c1[base + iy] *= ph;
      c2[base + iy] *= ph;
      c3[base + iy] *= ph;
    }
  };
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (int ix = 0; ix < g.nx; ++ix) body(ix);
  } else {
    for (int ix = 0; ix < g.nx; ++ix) body(ix);
  }
}

// psi~ <- cos(c p0 dt) psi~ - i sin(c p0 dt)/(c p0) H0(p) psi~, expanded
// blockwise: H0 (a,b,c,d) = (c sp (c,d) + mc2 (a,b); c sp (a,b) - mc2 (c,d))
// with sp = sigma.p and pz = 0 on the 2D lattice.
void apply_kinetic(SpinorField2D& f, const std::vector<double>& kc, const std::vector<double>& ks,
                   const PhysicalConstants& constants, Exec exec) {
  const Grid2D& g = f.grid();
  cplx* a = f.component(0);
  cplx* b = f.component(1);
  cplx* c = f.component(2);
  cplx* d = f.component(3);
  const double light = constants.c;
  const double mc2 = constants.mc2();
  const auto body = [&](int ix) {
    const double px = g.px(ix);
    const long base = g.index(ix, 0);
    for (int iy = 0; iy < g.ny; ++iy) {
      const long idx = base + iy;
      const cplx pm(px, -g.py(iy)); // px - i py
      const cplx pp = std::conj(pm);
      const cplx ha = light * pm * d[idx] + mc2 * a[idx];
      const cplx hb = light * pp * c[idx] + mc2 * b[idx];
      const cplx hc = light * pm * b[idx] - mc2 * c[idx];
      const cplx hd = light * pp * a[idx] - mc2 * d[idx];
      const double co = kc[idx];
      const cplx isn(0.0, ks[idx]);
      a[idx] = co * a[idx] - isn * ha;
      b[idx] = co * b[idx] - isn * hb;
      c[idx] = co * c[idx] - isn * hc;
      d[idx] = co * d[idx] - isn * hd;
    }
  };
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (int ix = 0; ix < g.nx; ++ix) body(ix);
  } else {
    for (int ix = 0; ix < g.nx; ++ix) body(ix);
  }
}

} // namespace

void SplitStepPropagator::step(SpinorField2D& field) const {
  if (field.rep() != Rep::position)
    throw std::logic_error("SplitStepPropagator::step expects a position-space field");
  apply_scalar_phase(field, half_phase_, exec_);
  field.to_momentum(exec_);
  apply_kinetic(field, kin_cos_, kin_sinc_, constants_, exec_);
  field.to_position(exec_);
  apply_scalar_phase(field, half_phase_, exec_);
}

void split_step(SpinorField2D& field, const std::vector<double>& potential_qphi,
                const PhysicalConstants& constants, double dt, Exec exec) {
  SplitStepPropagator prop(field.grid(), potential_qphi, constants, dt, exec);
  prop.step(field);
}

std::vector<ObservableRow> run_step_scenario(const Grid2D& grid, const GaussianPacketSpec& spec,
                                             const StepPotentialParams& params,
                                             const PropagationConfig& config,
                                             const PhysicalConstants& constants, Exec exec) {
  config.validate();
  const std::vector<double> potential = build_step_potential(params, grid);
  SpinorField2D field = initial_packet(spec, grid, constants, exec);
  const SplitStepPropagator prop(grid, potential, constants, config.dt, exec);
  const MeasurementTables tables(grid, constants, SpinDirection::y_axis(), exec);

  std::vector<ObservableRow> rows;
  rows.reserve(config.n_steps / config.sample_every + 1);

  const auto sample = [&](int step_index) {
    ObservableRow row = measure_with_tables(field, tables, constants, exec);
    row.t = step_index * config.dt;
    rows.push_back(row);
    const double leak = boundary_ring_fraction(field);
    if (leak > 1e-6)
      throw std::runtime_error("step scenario: probability reached the grid boundary (" +
                               std::to_string(leak) + ")");
  };

  sample(0);
  for (int s = 1; s <= config.n_steps; ++s) {
    prop.step(field);
    if (s % config.sample_every == 0 || s == config.n_steps) sample(s);
  }
  return rows;
}

} // namespace spinorlab::wp
