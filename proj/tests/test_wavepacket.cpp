#include <doctest.h>

#include <cmath>

#include "spinorlab/dirac.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/step_solver.hpp"

using namespace spinorlab;
using namespace spinorlab::wp;

namespace {

const PhysicalConstants kAtomic{};

Grid2D small_grid() { return Grid2D(256, 64, -0.3, 0.1, -0.2, 0.2); }

GaussianPacketSpec default_packet() {
  GaussianPacketSpec s;
  s.x0 = -0.1;
  s.px_mean = kAtomic.mc();
  return s;
}

double field_distance(const SpinorField2D& a, const SpinorField2D& b) {
  double acc = 0.0;
  for (int c = 0; c < 4; ++c)
    for (long i = 0; i < a.grid().size(); ++i)
      acc += std::norm(a.component(c)[i] - b.component(c)[i]);
  return std::sqrt(acc * a.grid().dx() * a.grid().dy());
}

} // namespace

TEST_SUITE_BEGIN("wavepacket");

TEST_CASE("grid: validation and momentum lattice") {
  CHECK_THROWS_AS(Grid2D(100, 64, 0, 1, 0, 1), ConfigError); // not a power of two
  CHECK_THROWS_AS(Grid2D(1, 64, 0, 1, 0, 1), ConfigError);
  CHECK_THROWS_AS(Grid2D(64, 64, 1, 0, 0, 1), ConfigError);

  const Grid2D g = small_grid();
  // lattice symmetric about zero up to the single Nyquist point
  int negatives = 0, positives = 0, nyquist = 0;
  for (int i = 0; i < g.nx; ++i) {
    const double p = g.px(i);
    if (std::abs(std::abs(p) - M_PI / g.dx()) < 1e-9) {
      ++nyquist;
      continue;
    }
    if (p > 0) ++positives;
    if (p < 0) ++negatives;
  }
  CHECK(positives == negatives);
  CHECK(nyquist == 1);
  CHECK(g.px(0) == 0.0);
}

TEST_CASE("step potential profile") {
  const Grid2D g = small_grid();
  const double v0 = 1.95 * kAtomic.mc2();
  const double w = 1.0 / (4.0 * kAtomic.c);
  const auto v = build_step_potential({v0, w}, g);

  // far left ~ 0, far right ~ V0 (the grid spans hundreds of widths w)
  CHECK(v[g.index(0, 5)] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(v[g.index(g.nx - 1, 5)] == doctest::Approx(v0).epsilon(1e-12));
  // midpoint: x = 0 is a grid point of this grid
  int i0 = -1;
  for (int i = 0; i < g.nx; ++i)
    if (std::abs(g.x(i)) < 1e-12) i0 = i;
  REQUIRE(i0 >= 0);
  CHECK(v[g.index(i0, 0)] == doctest::Approx(0.5 * v0).epsilon(1e-12));
  // monotone in x, independent of y
  for (int i = 1; i < g.nx; ++i) CHECK(v[g.index(i, 3)] >= v[g.index(i - 1, 3)]);
  for (int j = 1; j < g.ny; ++j) CHECK(v[g.index(10, j)] == v[g.index(10, 0)]);
}

TEST_CASE("initial packet") {
  const Grid2D g = small_grid();
  SpinorField2D f = initial_packet(default_packet(), g, kAtomic);
  CHECK(f.rep() == Rep::position);
  CHECK(f.norm() == doctest::Approx(1.0).epsilon(1e-12));

  const ObservableRow row = measure(f, kAtomic, SpinDirection::y_axis());
  CHECK(row.neg_energy < 1e-12);
  CHECK(row.spin[1] == doctest::Approx(0.5).epsilon(1e-10)); // S_FW
  CHECK(row.x_mean == doctest::Approx(-0.1).epsilon(1e-4));

  SUBCASE("representation change preserves the norm") {
    SpinorField2D m(f);
    m.to_momentum();
    CHECK(m.norm() == doctest::Approx(f.norm()).epsilon(1e-12));
    m.to_position();
    CHECK(field_distance(m, f) < 1e-12);
  }
  SUBCASE("a packet too wide for the box is rejected") {
    GaussianPacketSpec wide = default_packet();
    wide.spatial_width = 0.08;
    CHECK_THROWS_AS(initial_packet(wide, g, kAtomic), PacketTooWide);
  }
}

TEST_CASE("initial spin table on the production-resolution grid") {
  // momentum resolution matching the full scenario; x-range shortened
  const Grid2D g(512, 128, -0.35, 0.05, -0.2, 0.2);
  GaussianPacketSpec packet; // width 0.025, chi up along y
  packet.x0 = -0.15;
  packet.px_mean = kAtomic.mc();
  const SpinorField2D f = initial_packet(packet, g, kAtomic);
  const ObservableRow row = measure(f, kAtomic, SpinDirection::y_axis());

  CHECK(std::abs(row.spin[0] - 0.3556) < 5e-4); // S_P
  CHECK(std::abs(row.spin[1] - 0.5000) < 1e-6); // S_FW
  CHECK(std::abs(row.spin[2] - 0.3556) < 5e-4); // S_Cz
  CHECK(std::abs(row.spin[3] - 0.7084) < 1e-3); // S_F
  CHECK(std::abs(row.spin[4] - 0.5000) < 1e-6); // S_Ch
  CHECK(std::abs(row.spin[5] - 0.5000) < 1e-6); // S_Pr
  CHECK(std::abs(row.spin[6] - 0.5000) < 1e-6); // S_FG
}

TEST_CASE("split step on eigenmodes and constants") {
  const Grid2D g = small_grid();
  const std::vector<double> zero_potential(g.size(), 0.0);
  const double dt = 1e-6;

  SUBCASE("free plane-wave mode only picks up the phase e^{-i c p0 dt}") {
    SpinorField2D f(g, Rep::momentum);
    const int ix = 17, iy = 5;
    const Momentum3 p{g.px(ix), g.py(iy), 0.0};
    const auto [up, dn] = dirac::chi_pair(SpinDirection::y_axis());
    f.set(g.index(ix, iy), dirac::u_spinor(kAtomic, up, p));
    f.to_position();

    SpinorField2D before(f);
    split_step(f, zero_potential, kAtomic, dt);

    f.to_momentum();
    before.to_momentum();
    const double phase = -kAtomic.c * dirac::p0(kAtomic, p) * dt;
    double leak = 0.0, err = 0.0;
    for (long i = 0; i < g.size(); ++i) {
      const Spinor4 got = f.at(i);
      const Spinor4 expect = before.at(i) * std::polar(1.0, phase);
      if (i == g.index(ix, iy))
        err = (got - expect).norm();
      else
        leak += got.norm2();
    }
    CHECK(err < 1e-13);
    CHECK(leak < 1e-26);
  }

  SUBCASE("constant potential is a pure gauge: observables unchanged") {
    SpinorField2D f = initial_packet(default_packet(), g, kAtomic);
    const ObservableRow before = measure(f, kAtomic, SpinDirection::y_axis());
    const std::vector<double> vbar(g.size(), 0.37 * kAtomic.mc2());
    for (int s = 0; s < 5; ++s) split_step(f, vbar, kAtomic, dt);
    // undo the free part by evolving a reference without potential
    SpinorField2D ref = initial_packet(default_packet(), g, kAtomic);
    for (int s = 0; s < 5; ++s) split_step(ref, zero_potential, kAtomic, dt);
    const ObservableRow a = measure(f, kAtomic, SpinDirection::y_axis());
    const ObservableRow b = measure(ref, kAtomic, SpinDirection::y_axis());
    CHECK(a.x_mean == doctest::Approx(b.x_mean).epsilon(1e-12));
    for (int k = 0; k < 7; ++k) CHECK(a.spin[k] == doctest::Approx(b.spin[k]).epsilon(1e-12));
    // and the fields differ exactly by the global phase e^{-i V t}
    const double phase = -0.37 * kAtomic.mc2() * 5 * dt;
    ref.scale(std::polar(1.0, phase));
    CHECK(field_distance(f, ref) < 1e-12);
  }

  SUBCASE("norm is preserved to 1e-13 per step") {
    SpinorField2D f = initial_packet(default_packet(), g, kAtomic);
    const auto v = build_step_potential({1.95 * kAtomic.mc2(), 1.0 / (4 * kAtomic.c)}, g);
    const SplitStepPropagator prop(g, v, kAtomic, dt);
    for (int s = 0; s < 10; ++s) {
      prop.step(f);
      CHECK(std::abs(f.norm() - 1.0) < 1e-13 * (s + 1));
    }
  }
}

TEST_CASE("group velocity of the free packet") {
  const Grid2D g(256, 64, -0.5, 0.3, -0.5, 0.5);
  GaussianPacketSpec packet;
  packet.spatial_width = 0.05; // narrow momentum spread tightens the dispersion estimate
  packet.x0 = -0.1;
  packet.px_mean = kAtomic.mc();
  SpinorField2D f = initial_packet(packet, g, kAtomic);
  const std::vector<double> zero_potential(g.size(), 0.0);
  const double dt = 1e-6;
  const int steps = 10;

  const double x0 = measure(f, kAtomic, SpinDirection::y_axis()).x_mean;
  const SplitStepPropagator prop(g, zero_potential, kAtomic, dt);
  for (int s = 0; s < steps; ++s) prop.step(f);
  const double x1 = measure(f, kAtomic, SpinDirection::y_axis()).x_mean;

  const double vg = kAtomic.c / std::sqrt(2.0); // c^2 pbar / (c p0(pbar))
  CHECK((x1 - x0) / (steps * dt) == doctest::Approx(vg).epsilon(0.01));
}

TEST_CASE("conserved spin expectations in free evolution") {
  const Grid2D g = small_grid();
  SpinorField2D f = initial_packet(default_packet(), g, kAtomic);
  const std::vector<double> zero_potential(g.size(), 0.0);
  const SplitStepPropagator prop(g, zero_potential, kAtomic, 1e-6);
  const MeasurementTables tables(g, kAtomic, SpinDirection::y_axis());

  const ObservableRow r0 = measure_with_tables(f, tables, kAtomic);
  for (int s = 0; s < 50; ++s) prop.step(f);
  const ObservableRow r1 = measure_with_tables(f, tables, kAtomic);

  // FW, Cz, F, Pr, FG commute with H0; P and Ch are also conserved here
  // because the packet stays in the positive-energy subspace
  for (int k = 0; k < 7; ++k) {
    CAPTURE(k);
    CHECK(std::abs(r1.spin[k] - r0.spin[k]) < 1e-10);
  }
  CHECK(r1.neg_energy < 1e-12);
  // Chakrabarti equals FW on a positive-energy field
  CHECK(r1.spin[4] == doctest::Approx(r1.spin[1]).epsilon(1e-10));
}

TEST_CASE("time reversal: forward then backward returns the initial field") {
  const Grid2D g = small_grid();
  const auto v = build_step_potential({1.95 * kAtomic.mc2(), 1.0 / (4 * kAtomic.c)}, g);
  SpinorField2D f = initial_packet(default_packet(), g, kAtomic);
  const SpinorField2D start(f);
  const SplitStepPropagator fwd(g, v, kAtomic, 1e-6);
  const SplitStepPropagator bwd(g, v, kAtomic, -1e-6);
  const int n = 60;
  for (int s = 0; s < n; ++s) fwd.step(f);
  for (int s = 0; s < n; ++s) bwd.step(f);
  CHECK(field_distance(f, start) < 1e-8);
}

TEST_CASE("Richardson: halving dt changes the outcome below 1e-5") {
  // shortened scenario on a production-resolution grid: the packet starts
  // close to the barrier and is mid-interaction at t_end
  const Grid2D g(512, 64, -0.25, 0.15, -0.2, 0.2);
  GaussianPacketSpec packet;
  packet.x0 = -0.05;
  packet.px_mean = kAtomic.mc();
  const StepPotentialParams pot{1.95 * kAtomic.mc2(), 1.0 / (4.0 * kAtomic.c)};
  const double t_end = 6e-4;

  auto run = [&](double dt) {
    SpinorField2D f = initial_packet(packet, g, kAtomic);
    const auto v = build_step_potential(pot, g);
    const SplitStepPropagator prop(g, v, kAtomic, dt);
    const int steps = static_cast<int>(std::lround(t_end / dt));
    for (int s = 0; s < steps; ++s) prop.step(f);
    return measure(f, kAtomic, SpinDirection::y_axis());
  };

  const ObservableRow coarse = run(1e-6);
  const ObservableRow fine = run(5e-7);
  CHECK(coarse.neg_energy > 1e-4); // mid-interaction, not a trivial comparison
  for (int k = 0; k < 7; ++k) {
    CAPTURE(k);
    CHECK(std::abs(coarse.spin[k] - fine.spin[k]) < 1e-5);
  }
}

TEST_CASE("scenario plumbing on a reduced run") {
  const Grid2D g = small_grid();
  GaussianPacketSpec packet = default_packet();
  const StepPotentialParams pot{1.95 * kAtomic.mc2(), 1.0 / (4.0 * kAtomic.c)};
  PropagationConfig config;
  config.dt = 1e-6;
  config.n_steps = 40;
  config.sample_every = 10;
  const auto rows = run_step_scenario(g, packet, pot, config, kAtomic);
  REQUIRE(rows.size() == 5);
  CHECK(rows.front().t == 0.0);
  CHECK(rows.back().t == doctest::Approx(4e-5));
  for (const auto& r : rows) CHECK(std::abs(r.norm - 1.0) < 1e-11);
  CHECK_THROWS_AS(([&] {
                    PropagationConfig bad = config;
                    bad.dt = -1.0;
                    run_step_scenario(g, packet, pot, bad, kAtomic);
                  }()),
                  ConfigError);
}

TEST_SUITE_END();
