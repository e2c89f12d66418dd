#include <omp.h>

#include <cstdio>
#include <functional>

#include "spinorlab/exec.hpp"
#include "spinorlab/hydrogen.hpp"
#include "spinorlab/kapitza.hpp"
#include "spinorlab/step_solver.hpp"

using namespace spinorlab;

namespace {

void report(const char* name, const std::function<void(Exec)>& body, int reps) {
  // warm-up pass settles FFTW plans and caches
  body(Exec::serial);
  double t0 = omp_get_wtime();
  for (int r = 0; r < reps; ++r) body(Exec::serial);
  const double serial = (omp_get_wtime() - t0) / reps;
  body(Exec::openmp);
  t0 = omp_get_wtime();
  for (int r = 0; r < reps; ++r) body(Exec::openmp);
  const double parallel = (omp_get_wtime() - t0) / reps;
  std::printf("%-34s %10.4f ms %10.4f ms %8.2fx\n", name, serial * 1e3, parallel * 1e3,
              serial / parallel);
}

} // namespace

int main() {
  const int threads = apply_thread_cap_from_env();
  std::printf("threads: %d\n", threads);
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  const PhysicalConstants constants;

  // split-operator machinery on a mid-size grid
  const wp::Grid2D grid(512, 128, -0.35, 0.05, -0.2, 0.2);
  wp::GaussianPacketSpec packet;
  packet.x0 = -0.15;
  packet.px_mean = constants.mc();
  wp::SpinorField2D field = wp::initial_packet(packet, grid, constants);
  const auto potential = wp::build_step_potential({1.95 * constants.mc2(), 1.0 / (4 * constants.c)}, grid);

  report("split_step (512x128)", [&](Exec e) {
    wp::SplitStepPropagator prop(grid, potential, constants, 1e-6, e);
    for (int s = 0; s < 10; ++s) prop.step(field);
  }, 3);

  const wp::MeasurementTables tables(grid, constants, SpinDirection::y_axis());
  report("measure (512x128, 7 kinds)", [&](Exec e) {
    (void)wp::measure_with_tables(field, tables, constants, e);
  }, 5);

  report("hydrogen quadrature (Pauli, Z=92)", [&](Exec e) {
    const hyd::HydrogenParams params{92.0, constants, +1};
    (void)hyd::spin_statistics(spin::SpinKind::Pauli, params, {128, 32, 32}, e);
  }, 3);

  kd::LaserParams laser;
  laser.v0 = 0.88 * constants.mc2();
  laser.k = {0.5 * constants.mc(), 0, 0};
  laser.t_end_periods = 10.7;
  const kd::KapitzaModel model(laser, constants, {-0.3169 * constants.mc(), 0, 0.1 * constants.mc()},
                               SpinDirection::z_axis(), 8);
  report("kapitza rhs (n_max=8, 4096 evals)", [&](Exec e) {
    auto c = model.initial_ladder().amps;
    std::vector<cplx> dc;
    for (int i = 0; i < 4096; ++i) model.rhs(1e-5 * i, c, dc, e);
  }, 3);

  return 0;
}
