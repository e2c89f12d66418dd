#include "spinorlab/observables.hpp"

#include <omp.h>

#include <cmath>

#include "spinorlab/dirac.hpp"

namespace spinorlab::wp {

MeasurementTables::MeasurementTables(const Grid2D& grid, const PhysicalConstants& constants,
                                     const SpinDirection& n, Exec exec)
    : grid_(grid) {
  const long npts = grid_.size();
  for (auto& v : spin_) v.resize(npts);
  neg_.resize(npts);
  const double cutoff = spin::degenerate_momentum_rel_cutoff * constants.mc();

  const auto body = [&](int ix) {
    for (int iy = 0; iy < grid_.ny; ++iy) {
      const long idx = grid_.index(ix, iy);
      const Momentum3 p{grid_.px(ix), grid_.py(iy), 0.0};
      neg_[idx] = dirac::energy_projector(constants, p, -1);
      for (std::size_t k = 0; k < spin::all_spin_kinds.size(); ++k) {
        const spin::SpinKind kind = spin::all_spin_kinds[k];
        if (spin::needs_direction(kind) && p.norm() < cutoff) {
          spin_[k][idx] = Matrix4::zero();
          continue;
        }
        spin_[k][idx] = spin::spin_component(kind, constants, p, n);
      }
    }
  };
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (int ix = 0; ix < grid_.nx; ++ix) body(ix);
  } else {
    for (int ix = 0; ix < grid_.nx; ++ix) body(ix);
  }
}

namespace {

struct MomentumAccumulator {
  double norm2 = 0.0;
  double neg = 0.0;
  std::array<double, 7> spin{};
};

// Expectation values on the momentum lattice.  Chunked per grid row and
// summed in row order for policy-independent results.
MomentumAccumulator momentum_sums(const SpinorField2D& f, const MeasurementTables& t, Exec exec) {
  const Grid2D& g = f.grid();
  std::vector<MomentumAccumulator> partials(g.nx);
  const auto body = [&](int ix) {
    MomentumAccumulator acc;
    for (int iy = 0; iy < g.ny; ++iy) {
      const long idx = g.index(ix, iy);
      const Spinor4 v = f.at(idx);
      acc.norm2 += v.norm2();
      acc.neg += std::real(v.dot(t.neg_projector(idx) * v));
      for (int k = 0; k < 7; ++k)
        acc.spin[k] += std::real(v.dot(t.spin_matrix(k, idx) * v));
    }
    partials[ix] = acc;
  };
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (int ix = 0; ix < g.nx; ++ix) body(ix);
  } else {
    for (int ix = 0; ix < g.nx; ++ix) body(ix);
  }
  MomentumAccumulator total;
  for (const auto& p : partials) {
    total.norm2 += p.norm2;
    total.neg += p.neg;
    for (int k = 0; k < 7; ++k) total.spin[k] += p.spin[k];
  }
  return total;
}

double x_mean_position(const SpinorField2D& f, Exec exec) {
  const Grid2D& g = f.grid();
  std::vector<double> wx(g.nx, 0.0), w(g.nx, 0.0);
  const auto body = [&](int ix) {
    double acc = 0.0;
    for (int iy = 0; iy < g.ny; ++iy) {
      const long idx = g.index(ix, iy);
      double d = 0.0;
      for (int c = 0; c < 4; ++c) d += std::norm(f.component(c)[idx]);
      acc += d;
    }
    w[ix] = acc;
    wx[ix] = acc * g.x(ix);
  };
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (int ix = 0; ix < g.nx; ++ix) body(ix);
  } else {
    for (int ix = 0; ix < g.nx; ++ix) body(ix);
  }
  return sum_in_order(wx) / sum_in_order(w);
}

} // namespace

ObservableRow measure_with_tables(const SpinorField2D& field, const MeasurementTables& tables,
                                  const PhysicalConstants& constants, Exec exec) {
  (void)constants;
  ObservableRow row;
  if (field.rep() == Rep::momentum) {
    const auto acc = momentum_sums(field, tables, exec);
    SpinorField2D pos(field);
    pos.to_position(exec);
    row.x_mean = x_mean_position(pos, exec);
    const double cell = field.grid().dpx() * field.grid().dpy();
    row.norm = std::sqrt(acc.norm2 * cell);
    row.neg_energy = acc.neg / acc.norm2;
    for (int k = 0; k < 7; ++k) row.spin[k] = acc.spin[k] / acc.norm2;
  } else {
    SpinorField2D mom(field);
    mom.to_momentum(exec);
    const auto acc = momentum_sums(mom, tables, exec);
    row.x_mean = x_mean_position(field, exec);
    const double cell = mom.grid().dpx() * mom.grid().dpy();
    row.norm = std::sqrt(acc.norm2 * cell);
    row.neg_energy = acc.neg / acc.norm2;
    for (int k = 0; k < 7; ++k) row.spin[k] = acc.spin[k] / acc.norm2;
  }
  return row;
}

ObservableRow measure(const SpinorField2D& field, const PhysicalConstants& constants,
                      const SpinDirection& n, Exec exec) {
  const MeasurementTables tables(field.grid(), constants, n, exec);
  return measure_with_tables(field, tables, constants, exec);
}

double boundary_ring_fraction(const SpinorField2D& f) {
  const Grid2D& g = f.grid();
  double ring = 0.0, total = 0.0;
  for (int ix = 0; ix < g.nx; ++ix)
    for (int iy = 0; iy < g.ny; ++iy) {
      const long idx = g.index(ix, iy);
      double d = 0.0;
      for (int c = 0; c < 4; ++c) d += std::norm(f.component(c)[idx]);
      total += d;
      if (ix == 0 || iy == 0 || ix == g.nx - 1 || iy == g.ny - 1) ring += d;
    }
  return ring / total;
}

} // namespace spinorlab::wp
