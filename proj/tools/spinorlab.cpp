#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "spinorlab/algebra_check.hpp"
#include "spinorlab/exec.hpp"
#include "spinorlab/hydrogen.hpp"
#include "spinorlab/kapitza.hpp"
#include "spinorlab/output.hpp"
#include "spinorlab/step_solver.hpp"

namespace {

using nlohmann::json;
using namespace spinorlab;

struct CommonOpts {
  std::string output = "-"; // "-" = stdout
  std::string format = "csv";
  std::string config_path;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("-o,--output", opts.output, "output path ('-' for stdout)");
  sub->add_option("--format", opts.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--config", opts.config_path, "JSON config file; flags override file values");
}

// Flags override the config file: a file value is applied only when the flag
// was not passed on the command line.
void apply_config(const CLI::App& sub, const std::string& path,
                  const std::vector<std::pair<std::string, double*>>& doubles,
                  const std::vector<std::pair<std::string, int*>>& ints) {
  if (path.empty()) return;
  std::ifstream f(path);
  if (!f) throw IoError("cannot read config file: " + path);
  json root = json::parse(f);
  const std::string name = sub.get_name();
  if (!root.contains(name)) return;
  const json& section = root.at(name);
  for (const auto& [flag, target] : doubles) {
    if (section.contains(flag) && sub.count("--" + flag) == 0) *target = section.at(flag).get<double>();
  }
  for (const auto& [flag, target] : ints) {
    if (section.contains(flag) && sub.count("--" + flag) == 0) *target = section.at(flag).get<int>();
  }
}

void emit(const io::Table& table, const CommonOpts& opts) {
  const std::string text = io::render(table, io::format_from_string(opts.format));
  if (opts.output == "-" || opts.output.empty())
    std::cout << text;
  else
    io::write_file(opts.output, text);
}

int run_algebra_check_cmd(int samples, std::uint64_t seed, const CommonOpts& opts) {
  const PhysicalConstants constants;
  const auto result = spin::run_algebra_check(constants, samples, seed);
  io::Table table;
  table.header = {"check", "samples", "max_residual", "tolerance", "pass"};
  for (const auto& e : result.entries)
    table.rows.push_back(
        {e.name, double(result.samples), e.max_residual, e.tol, e.pass ? 1.0 : 0.0});
  emit(table, opts);
  std::cerr << "algebra-check: " << result.entries.size() << " checks over " << samples
            << " samples, " << (result.all_pass() ? "all passed" : "FAILURES") << "\n";
  return result.all_pass() ? 0 : 1;
}

int run_step_scatter(const wp::Grid2D& grid, const wp::GaussianPacketSpec& packet,
                     const wp::StepPotentialParams& pot, const wp::PropagationConfig& prop,
                     const CommonOpts& opts) {
  const PhysicalConstants constants;
  const auto rows = wp::run_step_scenario(grid, packet, pot, prop, constants);
  emit(io::observable_table(rows), opts);
  const double drift = std::abs(rows.back().norm - 1.0);
  std::cerr << "step-scatter: " << rows.size() << " samples, final t = " << rows.back().t
            << ", norm drift = " << drift << "\n";
  return drift < 1e-9 ? 0 : 1;
}

int run_kapitza(const kd::LaserParams& laser, const Momentum3& p, const kd::KapitzaConfig& config,
                const CommonOpts& opts) {
  const PhysicalConstants constants;
  const kd::KapitzaModel model(laser, constants, p, SpinDirection::z_axis(), config.n_max);
  const auto samples = model.integrate(config);
  std::vector<wp::ObservableRow> rows;
  rows.reserve(samples.size());
  for (const auto& s : samples) rows.push_back(s.row);
  emit(io::observable_table(rows), opts);
  const double drift = std::abs(rows.back().norm - 1.0);
  std::cerr << "kapitza: " << rows.size() << " samples over " << laser.t_end_periods
            << " periods, norm drift = " << drift << "\n";
  return drift < 1e-8 ? 0 : 1;
}

int run_hydrogen_scan(double z_min, double z_max, int steps, const std::string& kinds_arg,
                      const hyd::QuadratureSpec& quad, const CommonOpts& opts) {
  const PhysicalConstants constants;
  std::vector<spin::SpinKind> kinds;
  if (kinds_arg == "all") {
    kinds.assign(spin::all_spin_kinds.begin(), spin::all_spin_kinds.end());
  } else {
    std::string token;
    std::istringstream in(kinds_arg);
    while (std::getline(in, token, ',')) kinds.push_back(spin::kind_from_string(token));
  }

  io::Table table;
  table.header = {"Z", "kind", "mean", "variance"};
  bool pryce_ok = true;
  for (int i = 0; i < steps; ++i) {
    const double z = steps == 1 ? z_min : z_min + (z_max - z_min) * i / (steps - 1);
    for (spin::SpinKind kind : kinds) {
      const hyd::HydrogenParams params{z, constants, +1};
      const hyd::SpinStats stats = hyd::spin_statistics(kind, params, quad);
      table.rows.push_back({z, spin::short_name(kind), stats.mean, stats.variance});
      if (kind == spin::SpinKind::Pryce)
        pryce_ok = pryce_ok && std::abs(stats.mean - 0.5) < 1e-6 && stats.variance < 1e-8;
    }
  }
  emit(table, opts);
  std::cerr << "hydrogen-scan: " << table.rows.size() << " records"
            << (pryce_ok ? "" : ", PRYCE INVARIANT FAILED") << "\n";
  return pryce_ok ? 0 : 1;
}

int run_chakrabarti(double pbar_min, double pbar_max, int steps, double sigma,
                    const CommonOpts& opts) {
  const PhysicalConstants constants;
  io::Table table;
  table.header = {"pbar_x_mc", "sigma_mc", "expectation", "closed_form_limit"};
  bool ok = true;
  double prev = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double pb = steps == 1 ? pbar_min : pbar_min + (pbar_max - pbar_min) * i / (steps - 1);
    const double pbx = pb * constants.mc();
    const double val =
        spin::chakrabarti_gaussian_expectation(constants, sigma * constants.mc(), pbx);
    const double closed = spin::chakrabarti_gaussian_closed_form(constants, pbx);
    table.rows.push_back({pb, sigma, val, closed});
    if (pb != 0.0 && closed <= 0.5) ok = false;          // strictly above 1/2 away from rest
    if (i > 0 && std::abs(pb) >= std::abs(prev) && closed + 1e-15 < prev) ok = false;
    prev = closed;
  }
  emit(table, opts);
  std::cerr << "chakrabarti-gaussian: " << steps << " points, sigma = " << sigma << " m0c"
            << (ok ? "" : ", PATHOLOGY INVARIANT FAILED") << "\n";
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  apply_thread_cap_from_env();
  const PhysicalConstants constants;

  CLI::App app{"spinorlab: relativistic spin operators for the Dirac equation"};
  app.require_subcommand(1);

  // algebra-check
  auto* algebra = app.add_subcommand("algebra-check", "verify the operator algebra suite");
  int samples = 100;
  std::uint64_t seed = 0;
  CommonOpts algebra_opts;
  algebra->add_option("--samples", samples, "random (p, n) samples");
  algebra->add_option("--seed", seed, "rng seed");
  add_common(algebra, algebra_opts);

  // step-scatter
  auto* step = app.add_subcommand("step-scatter", "wave-packet scattering at a potential step");
  double v0 = 1.95;                 // units of m0 c^2
  double w = 1.0 / (4.0 * constants.c);
  double width = 0.025;
  double x0 = -0.175, y0 = 0.0;
  double px = 1.0;                  // units of m0 c
  int nx = 1024, ny = 128;
  double x_min = -0.6, x_max = 0.2, y_min = -0.3, y_max = 0.3;
  double dt = 1e-6, t_end = 0.0035;
  int sample_every = 10;
  CommonOpts step_opts;
  step->add_option("--v0", v0, "barrier height in units of m0 c^2");
  step->add_option("--w", w, "barrier smoothing width (a.u.)");
  step->add_option("--width", width, "packet spatial width (a.u.)");
  step->add_option("--x0", x0, "packet center x (a.u.)");
  step->add_option("--y0", y0, "packet center y (a.u.)");
  step->add_option("--px", px, "mean momentum in units of m0 c");
  step->add_option("--nx", nx, "grid points in x (power of two)");
  step->add_option("--ny", ny, "grid points in y (power of two)");
  step->add_option("--x-min", x_min);
  step->add_option("--x-max", x_max);
  step->add_option("--y-min", y_min);
  step->add_option("--y-max", y_max);
  step->add_option("--dt", dt, "time step (a.u.)");
  step->add_option("--t-end", t_end, "final time (a.u.)");
  step->add_option("--sample-every", sample_every, "steps between samples");
  add_common(step, step_opts);

  // kapitza
  auto* kap = app.add_subcommand("kapitza", "spin dynamics in a standing laser field");
  double kd_v0 = 0.88;   // m0 c^2
  double kd_k = 0.5;     // m0 c, along x
  double kd_px = -0.3169, kd_pz = 0.1; // m0 c
  double kd_t_end = 10.7; // periods
  int n_max = 8;
  int steps_per_period = 4096;
  int kd_sample_every = 64;
  CommonOpts kd_opts;
  kap->add_option("--v0", kd_v0, "ponderomotive amplitude in units of m0 c^2");
  kap->add_option("--k", kd_k, "wave number along x in units of m0 c");
  kap->add_option("--px", kd_px, "initial momentum x in units of m0 c");
  kap->add_option("--pz", kd_pz, "initial momentum z in units of m0 c");
  kap->add_option("--t-end", kd_t_end, "pulse duration in laser periods");
  kap->add_option("--n-max", n_max, "mode-ladder truncation");
  kap->add_option("--steps-per-period", steps_per_period, "RK4 steps per laser period");
  kap->add_option("--sample-every", kd_sample_every, "RK4 steps between samples");
  add_common(kap, kd_opts);

  // hydrogen-scan
  auto* hyd_cmd = app.add_subcommand("hydrogen-scan", "ground-state spin statistics vs Z");
  double z_min = 1.0, z_max = 137.0;
  int z_steps = 137;
  std::string kinds = "all";
  int radial_nodes = 256, angular_nodes = 64;
  CommonOpts hyd_opts;
  hyd_cmd->add_option("--kinds", kinds, "comma-separated kinds or 'all'");
  hyd_cmd->add_option("--z-min", z_min);
  hyd_cmd->add_option("--z-max", z_max);
  hyd_cmd->add_option("--steps", z_steps);
  hyd_cmd->add_option("--radial-nodes", radial_nodes);
  hyd_cmd->add_option("--angular-nodes", angular_nodes);
  add_common(hyd_cmd, hyd_opts);

  // chakrabarti-gaussian
  auto* ch = app.add_subcommand("chakrabarti-gaussian",
                                "Gaussian-packet Chakrabarti expectation scan");
  double pbar_min = 0.0, pbar_max = 3.0;
  int ch_steps = 61;
  double ch_sigma = 1e-3; // units of m0 c
  CommonOpts ch_opts;
  ch->add_option("--pbar-min", pbar_min, "minimum mean momentum in units of m0 c");
  ch->add_option("--pbar-max", pbar_max, "maximum mean momentum in units of m0 c");
  ch->add_option("--steps", ch_steps);
  ch->add_option("--sigma", ch_sigma, "momentum width in units of m0 c (0 = closed form)");
  add_common(ch, ch_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (algebra->parsed()) {
      int samples_i = samples;
      apply_config(*algebra, algebra_opts.config_path, {}, {{"samples", &samples_i}});
      return run_algebra_check_cmd(samples_i, seed, algebra_opts);
    }
    if (step->parsed()) {
      apply_config(*step, step_opts.config_path,
                   {{"v0", &v0}, {"w", &w}, {"width", &width}, {"x0", &x0}, {"y0", &y0},
                    {"px", &px}, {"x-min", &x_min}, {"x-max", &x_max}, {"y-min", &y_min},
                    {"y-max", &y_max}, {"dt", &dt}, {"t-end", &t_end}},
                   {{"nx", &nx}, {"ny", &ny}, {"sample-every", &sample_every}});
      const wp::Grid2D grid(nx, ny, x_min, x_max, y_min, y_max);
      wp::GaussianPacketSpec packet;
      packet.spatial_width = width;
      packet.x0 = x0;
      packet.y0 = y0;
      packet.px_mean = px * constants.mc();
      const wp::StepPotentialParams pot{v0 * constants.mc2(), w};
      wp::PropagationConfig prop;
      prop.dt = dt;
      prop.n_steps = static_cast<int>(std::lround(t_end / dt));
      prop.sample_every = sample_every;
      return run_step_scatter(grid, packet, pot, prop, step_opts);
    }
    if (kap->parsed()) {
      apply_config(*kap, kd_opts.config_path,
                   {{"v0", &kd_v0}, {"k", &kd_k}, {"px", &kd_px}, {"pz", &kd_pz},
                    {"t-end", &kd_t_end}},
                   {{"n-max", &n_max}, {"steps-per-period", &steps_per_period},
                    {"sample-every", &kd_sample_every}});
      kd::LaserParams laser;
      laser.v0 = kd_v0 * constants.mc2();
      laser.k = Momentum3{kd_k * constants.mc(), 0.0, 0.0};
      laser.t_end_periods = kd_t_end;
      const Momentum3 p{kd_px * constants.mc(), 0.0, kd_pz * constants.mc()};
      kd::KapitzaConfig config{n_max, steps_per_period, kd_sample_every};
      return run_kapitza(laser, p, config, kd_opts);
    }
    if (hyd_cmd->parsed()) {
      apply_config(*hyd_cmd, hyd_opts.config_path, {{"z-min", &z_min}, {"z-max", &z_max}},
                   {{"steps", &z_steps}, {"radial-nodes", &radial_nodes},
                    {"angular-nodes", &angular_nodes}});
      hyd::QuadratureSpec quad{radial_nodes, angular_nodes, angular_nodes};
      return run_hydrogen_scan(z_min, z_max, z_steps, kinds, quad, hyd_opts);
    }
    if (ch->parsed()) {
      apply_config(*ch, ch_opts.config_path,
                   {{"pbar-min", &pbar_min}, {"pbar-max", &pbar_max}, {"sigma", &ch_sigma}},
                   {{"steps", &ch_steps}});
      return run_chakrabarti(pbar_min, pbar_max, ch_steps, ch_sigma, ch_opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
