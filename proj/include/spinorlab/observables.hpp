#pragma once

#include <array>
#include <vector>

#include "spinorlab/constants.hpp"
#include "spinorlab/exec.hpp"
#include "spinorlab/spin_operators.hpp"
#include "spinorlab/spinor_field.hpp"

namespace spinorlab::wp {

// One sample of the scenario time series.  spin[] is indexed by the order of
// spin::all_spin_kinds (P, FW, Cz, F, Ch, Pr, FG).
struct ObservableRow {
  double t = 0.0;
  double norm = 0.0;
  double x_mean = 0.0;
  double neg_energy = 0.0;
  std::array<double, 7> spin{};
};

// Momentum-lattice tables of the seven n.S matrices and the negative-energy
// projector, built once per (grid, n) and reused across samples.  At the
// single p = 0 lattice point the direction-dependent kinds (Pryce,
// Fradkin-Good) are stored as zero; that point is excluded from their
// expectation values (its occupation is negligible for any packet the grid
// can represent).
class MeasurementTables {
public:
  MeasurementTables(const Grid2D& grid, const PhysicalConstants& constants,
                    const SpinDirection& n, Exec exec = Exec::openmp);

  const Matrix4& spin_matrix(int kind_index, long point) const {
    return spin_[kind_index][point];
  }
  const Matrix4& neg_projector(long point) const { return neg_[point]; }
  const Grid2D& grid() const { return grid_; }

private:
  Grid2D grid_;
  std::array<std::vector<Matrix4>, 7> spin_;
  std::vector<Matrix4> neg_;
};

// All spin expectations in momentum space (operators act as plain matrices
// on the lattice), <x> in position space, everything divided by the norm.
// The field may be handed over in either representation.
ObservableRow measure(const SpinorField2D& field, const PhysicalConstants& constants,
                      const SpinDirection& n, Exec exec = Exec::openmp);

// Table-backed variant used by scenario loops.
ObservableRow measure_with_tables(const SpinorField2D& field, const MeasurementTables& tables,
                                  const PhysicalConstants& constants, Exec exec = Exec::openmp);

// Probability in the outermost ring of cells, relative to the total.
double boundary_ring_fraction(const SpinorField2D& position_field);

} // namespace spinorlab::wp
