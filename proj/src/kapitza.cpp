#include "spinorlab/kapitza.hpp"

#include <omp.h>

#include <cmath>

#include "spinorlab/dirac.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/spin_operators.hpp"

namespace spinorlab::kd {

double LaserParams::period(const PhysicalConstants& constants) const {
  return 2.0 * M_PI / (constants.c * k.norm());
}

double LaserParams::t_end(const PhysicalConstants& constants) const {
  return t_end_periods * period(constants);
}

void LaserParams::validate() const {
  if (!(k.norm() > 0.0)) throw ConfigError("laser: |k| must be positive");
  if (!(t_end_periods > 0.0)) throw ConfigError("laser: pulse duration must be positive");
}

double ModeLadder::norm2() const {
  double s = 0.0;
  for (const cplx& a : amps) s += std::norm(a);
  return s;
}

CouplingTensor build_coupling(const LaserParams& params, const PhysicalConstants& constants,
                              const Momentum3& base_p, const SpinDirection& spin_dir, int n_max) {
  params.validate();
  if (n_max < 2) throw ConfigError("mode ladder: n_max must be >= 2");
  const auto [chi_up, chi_dn] = dirac::chi_pair(spin_dir);
  const int ns = 2 * n_max + 1;
  CouplingTensor out;
  out.energies.resize(ns);
  out.basis.resize(ns);
  for (int s = 0; s < ns; ++s) {
    const Momentum3 pn = base_p + params.k * double(s - n_max);
    const double e = constants.c * dirac::p0(constants, pn);
    out.energies[s] = {e, e, -e, -e};
    const Spinor4 cols[4] = {dirac::u_spinor(constants, chi_up, pn),
                             dirac::u_spinor(constants, chi_dn, pn),
                             dirac::v_spinor(constants, chi_up, pn),
                             dirac::v_spinor(constants, chi_dn, pn)};
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) out.basis[s](i, j) = cols[j][i];
  }
  out.overlap_up2.resize(ns);
  for (int s = 0; s + 2 < ns; ++s) out.overlap_up2[s] = out.basis[s].dagger() * out.basis[s + 2];
  return out;
}

KapitzaModel::KapitzaModel(const LaserParams& params, const PhysicalConstants& constants,
                           const Momentum3& base_p, const SpinDirection& spin_dir, int n_max)
    : params_(params),
      constants_(constants),
      base_p_(base_p),
      spin_dir_(spin_dir),
      n_max_(n_max),
      coupling_(build_coupling(params, constants, base_p, spin_dir, n_max)),
      t_end_(params.t_end(constants)) {}

ModeLadder KapitzaModel::initial_ladder() const {
  ModeLadder l;
  l.n_max = n_max_;
  l.base_p = base_p_;
  l.amps.assign(4 * l.sites(), cplx(0, 0));
  l.site(0)[0] = 1.0; // c_0^{+chi_up} = 1
  return l;
}

void KapitzaModel::rhs(double t, const std::vector<cplx>& c, std::vector<cplx>& dc,
                       Exec exec) const {
  const int ns = coupling_.sites();
  dc.resize(c.size());
  const double env = std::sin(M_PI * t / t_end_);
  const double vw = params_.v0 * env * env;

  const auto body = [&](int s) {
    const cplx* cs = c.data() + 4 * s;
    cplx acc[4];
    // free energies + the cos^2 site-diagonal shift V0 w / 2
    for (int i = 0; i < 4; ++i) acc[i] = (coupling_.energies[s][i] + 0.5 * vw) * cs[i];
    // V0 w / 4 couplings to n +- 2, dressed by the basis overlaps
    if (s + 2 < ns) {
      const Matrix4& b = coupling_.overlap_up2[s]; // U_s^dag U_{s+2}
      const cplx* cn = c.data() + 4 * (s + 2);
      for (int i = 0; i < 4; ++i) {
        cplx v = 0.0;
        for (int j = 0; j < 4; ++j) v += b(i, j) * cn[j];
        acc[i] += 0.25 * vw * v;
      }
    }
    if (s - 2 >= 0) {
      const Matrix4& b = coupling_.overlap_up2[s - 2]; // U_{s-2}^dag U_s; need its dagger
      const cplx* cn = c.data() + 4 * (s - 2);
      for (int i = 0; i < 4; ++i) {
        cplx v = 0.0;
        for (int j = 0; j < 4; ++j) v += std::conj(b(j, i)) * cn[j];
        acc[i] += 0.25 * vw * v;
      }
    }
    for (int i = 0; i < 4; ++i) dc[4 * s + i] = cplx(0, -1) * acc[i];
  };

  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (int s = 0; s < ns; ++s) body(s);
  } else {
    for (int s = 0; s < ns; ++s) body(s);
  }
}

wp::ObservableRow KapitzaModel::observables(const ModeLadder& ladder, const SpinDirection& n,
                                            Exec exec) const {
  (void)exec; // 2 n_max + 1 sites: not worth forking
  const int ns = coupling_.sites();
  wp::ObservableRow row;
  double norm2 = 0.0;
  double neg = 0.0;
  std::array<double, 7> spin{};
  for (int s = 0; s < ns; ++s) {
    const cplx* cs = ladder.amps.data() + 4 * s;
    norm2 += std::norm(cs[0]) + std::norm(cs[1]) + std::norm(cs[2]) + std::norm(cs[3]);
    neg += std::norm(cs[2]) + std::norm(cs[3]);
    const Momentum3 pn = base_p_ + params_.k * double(s - n_max_);
    Spinor4 psi;
    for (int i = 0; i < 4; ++i) {
      cplx v = 0.0;
      for (int j = 0; j < 4; ++j) v += coupling_.basis[s](i, j) * cs[j];
      psi[i] = v;
    }
    for (std::size_t kk = 0; kk < spin::all_spin_kinds.size(); ++kk) {
      const Matrix4 m = spin::spin_component(spin::all_spin_kinds[kk], constants_, pn, n);
      spin[kk] += std::real(psi.dot(m * psi));
    }
  }
  row.norm = std::sqrt(norm2);
  row.neg_energy = neg / norm2;
  row.x_mean = 0.0; // sharp-momentum state, no localized center of mass
  for (int kk = 0; kk < 7; ++kk) row.spin[kk] = spin[kk] / norm2;
  return row;
}

std::vector<KapitzaModel::Sample> KapitzaModel::integrate(const KapitzaConfig& config,
                                                          Exec exec) const {
  const double period = params_.period(constants_);
  const double dt = period / config.steps_per_period;
  const long n_steps = std::lround(t_end_ / dt);

  ModeLadder ladder = initial_ladder();
  std::vector<KapitzaModel::Sample> samples;
  const auto record = [&](long step) {
    Sample s{step * dt / period, observables(ladder, spin_dir_, exec)};
    s.row.t = s.t_over_period;
    samples.push_back(s);
  };
  record(0);

  std::vector<cplx> k1, k2, k3, k4, tmp(ladder.amps.size());
  double prev_norm2 = ladder.norm2();
  for (long step = 0; step < n_steps; ++step) {
    const double t = step * dt;
    rhs(t, ladder.amps, k1, exec);
    for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] = ladder.amps[i] + 0.5 * dt * k1[i];
    rhs(t + 0.5 * dt, tmp, k2, exec);
    for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] = ladder.amps[i] + 0.5 * dt * k2[i];
    rhs(t + 0.5 * dt, tmp, k3, exec);
    for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] = ladder.amps[i] + dt * k3[i];
    rhs(t + dt, tmp, k4, exec);
    for (std::size_t i = 0; i < tmp.size(); ++i)
      ladder.amps[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    const double n2 = ladder.norm2();
    if (std::abs(n2 - prev_norm2) > 1e-6)
      throw StepTooLarge("kapitza: single-step norm change " + std::to_string(n2 - prev_norm2));
    prev_norm2 = n2;

    if ((step + 1) % config.sample_every == 0 || step + 1 == n_steps) record(step + 1);
  }
  return samples;
}

} // namespace spinorlab::kd
