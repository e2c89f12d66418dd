#include "spinorlab/algebra_check.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "spinorlab/eigen4.hpp"

namespace spinorlab::spin {

std::vector<RandomSample> sample_momenta(const PhysicalConstants& k, int count,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> comp(-3.0 * k.mc(), 3.0 * k.mc());
  std::uniform_real_distribution<double> ct(-1.0, 1.0);
  std::uniform_real_distribution<double> az(0.0, 2.0 * M_PI);
  std::vector<RandomSample> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const Momentum3 p{comp(rng), comp(rng), comp(rng)};
    if (p.norm() < degenerate_momentum_rel_cutoff * k.mc()) continue;
    const SpinDirection n{std::acos(ct(rng)), az(rng)};
    out.push_back({p, n});
  }
  return out;
}

bool AlgebraCheckResult::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
}

namespace {

struct Agg {
  std::map<std::string, std::pair<double, double>> worst; // name -> (residual, tol)

  void add(const std::string& name, double residual, double tol) {
    auto [it, inserted] = worst.emplace(name, std::make_pair(residual, tol));
    if (!inserted) it->second.first = std::max(it->second.first, residual);
  }
};

// eigenvalue multiset + per-vector eigen residual + (for Hermitian kinds)
// degenerate-subspace projector comparison against the numeric solver
void check_eigensystem(Agg& agg, SpinKind kind, const PhysicalConstants& k, const Momentum3& p,
                       const SpinDirection& n) {
  const Matrix4 sn = spin_component(kind, k, p, n);
  const EigenSystem closed = closed_form_eigensystem(kind, k, p, n);
  const std::string label = std::string("eigensystem/") + to_string(kind);

  double vec_res = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Spinor4 v = closed.eigenvectors[i].normalized();
    const Spinor4 lhs = sn * v;
    const Spinor4 rhs = v * cplx(closed.eigenvalues[i], 0);
    vec_res = std::max(vec_res, (lhs - rhs).norm() / std::max(1.0, std::abs(closed.eigenvalues[i])));
  }
  agg.add(label + "/vector-residual", vec_res, 1e-10);

  std::array<double, 4> closed_vals = closed.eigenvalues;
  std::sort(closed_vals.begin(), closed_vals.end());
  if (kind == SpinKind::Chakrabarti) {
    const GeneralEigen4 num = eig_general(sn);
    std::array<double, 4> nv{};
    double imag = 0.0;
    for (int i = 0; i < 4; ++i) {
      nv[i] = std::real(num.values[i]);
      imag = std::max(imag, std::abs(std::imag(num.values[i])));
    }
    std::sort(nv.begin(), nv.end());
    double dv = imag;
    for (int i = 0; i < 4; ++i) dv = std::max(dv, std::abs(nv[i] - closed_vals[i]));
    agg.add(label + "/values", dv, 1e-10);
  } else {
    const HermitianEigen4 num = eig_hermitian(sn);
    std::array<double, 4> nv = num.values;
    std::sort(nv.begin(), nv.end());
    double dv = 0.0;
    for (int i = 0; i < 4; ++i) dv = std::max(dv, std::abs(nv[i] - closed_vals[i]));
    agg.add(label + "/values", dv, 1e-10);

    // spectral projectors of the two degenerate pairs
    for (int pair = 0; pair < 2; ++pair) {
      const double lam = closed.eigenvalues[2 * pair];
      Matrix4 pc = Matrix4::zero();
      for (int i = 2 * pair; i < 2 * pair + 2; ++i) {
        const Spinor4 v = closed.eigenvectors[i].normalized();
        for (int r = 0; r < 4; ++r)
          for (int cc = 0; cc < 4; ++cc) pc(r, cc) += v[r] * std::conj(v[cc]);
      }
      const Matrix4 pn = spectral_projector(num, lam, 1e-8 * std::max(1.0, std::abs(lam)));
      agg.add(label + "/subspace", relative_residual(pc, pn), 1e-10);
    }
  }
}

void check_triplet(Agg& agg, SpinKind kind, const PhysicalConstants& k, const Momentum3& p) {
  const auto t = spin_matrices(kind, k, p);
  const std::string label = std::string("triplet/") + to_string(kind);

  double herm = 0.0;
  for (const auto& s : t.S) herm = std::max(herm, relative_residual(s, s.dagger()));
  if (kind == SpinKind::Chakrabarti) {
    // beta-pseudo-Hermitian: beta S Hermitian even though S is not
    double bh = 0.0;
    const Matrix4& beta = dirac::matrices().beta;
    for (const auto& s : t.S) {
      const Matrix4 bs = beta * s;
      bh = std::max(bh, relative_residual(bs, bs.dagger()));
    }
    agg.add(label + "/beta-pseudo-hermitian", bh, 1e-12);
  } else {
    agg.add(label + "/hermitian", herm, 1e-12);
  }

  Matrix4 sq = Matrix4::zero();
  for (const auto& s : t.S) sq = sq + s * s;
  agg.add(label + "/squared-length", relative_residual(sq, cplx(squared_length(kind, k, p), 0) * Matrix4::identity()),
          1e-12);
}

void check_transforms(Agg& agg, const PhysicalConstants& k, const Momentum3& p) {
  const Matrix4 id = Matrix4::identity();
  const Matrix4 h0 = dirac::free_hamiltonian(k, p);
  const double e = k.c * dirac::p0(k, p);
  const auto& d = dirac::matrices();

  const Matrix4 t_fw = transform_fw(k, p);
  agg.add("transform/fw-unitary", relative_residual(t_fw * t_fw.dagger(), id), 1e-12);
  agg.add("transform/fw-block-diagonal",
          relative_residual(t_fw.dagger() * h0 * t_fw, cplx(e, 0) * d.beta), 1e-12);

  const auto [t_ch, t_ch_inv] = transform_ch(k, p);
  agg.add("transform/ch-inverse", relative_residual(t_ch * t_ch_inv, id), 1e-12);
  agg.add("transform/ch-pseudo-unitary",
          relative_residual(t_ch.dagger(), d.beta * t_ch_inv * d.beta), 1e-12);
  const Mat2 sp = Mat2::sigma_dot(p);
  const Matrix4 h_expected =
      cplx(2.0 * k.c, 0) * Matrix4::from_blocks(Mat2::zero(), Mat2::zero(), sp, Mat2::zero());
  agg.add("transform/ch-transformed-h0",
          relative_residual(t_ch * h0 * t_ch_inv, cplx(e, 0) * d.beta + h_expected), 1e-12);

  const Matrix4 t_pr = transform_pr(p);
  agg.add("transform/pr-unitary", relative_residual(t_pr * t_pr.dagger(), id), 1e-12);
  const Matrix4 pr_h = cplx(k.mc2(), 0) * id - cplx(0, k.c * p.norm()) * d.gamma5;
  agg.add("transform/pr-transformed-h0",
          relative_residual(t_pr.dagger() * h0 * t_pr, pr_h * d.beta), 1e-12);
}

} // namespace

AlgebraCheckResult run_algebra_check(const PhysicalConstants& k, int samples, std::uint64_t seed) {
  const auto draws = sample_momenta(k, samples, seed);
  Agg agg;
  for (const auto& [p, n] : draws) {
    for (SpinKind kind : all_spin_kinds) {
      check_triplet(agg, kind, k, p);
      const CommutatorReport cr = commutator_check(kind, k, p);
      agg.add(std::string("commutator/") + to_string(kind), cr.algebra_residual, 1e-12);
      agg.add(std::string("h0-commutator/") + to_string(kind), cr.h0_residual, 1e-12);
      check_eigensystem(agg, kind, k, p, n);
    }
    const IdentityReport sub = verify_subspace_identities(k, p, n);
    for (const auto& entry : sub.entries) agg.add("subspace/" + entry.name, entry.residual, entry.tol);
    const IdentityReport forms = equivalent_forms_report(k, p);
    for (const auto& entry : forms.entries) agg.add("forms/" + entry.name, entry.residual, entry.tol);
    check_transforms(agg, k, p);
  }

  AlgebraCheckResult result;
  result.samples = samples;
  for (const auto& [name, rt] : agg.worst)
    result.entries.push_back({name, rt.first, rt.second, rt.first < rt.second});
  return result;
}

} // namespace spinorlab::spin
