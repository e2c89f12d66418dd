#include "spinorlab/spin_operators.hpp"

#include <algorithm>
#include <cmath>

#include "spinorlab/eigen4.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/quadrature.hpp"

namespace spinorlab::spin {

using dirac::matrices;

const char* to_string(SpinKind k) {
  switch (k) {
    case SpinKind::Pauli: return "pauli";
    case SpinKind::FoldyWouthuysen: return "foldy-wouthuysen";
    case SpinKind::Czachor: return "czachor";
    case SpinKind::Frenkel: return "frenkel";
    case SpinKind::Chakrabarti: return "chakrabarti";
    case SpinKind::Pryce: return "pryce";
    case SpinKind::FradkinGood: return "fradkin-good";
  }
  return "?";
}

const char* short_name(SpinKind k) {
  switch (k) {
    case SpinKind::Pauli: return "S_P";
    case SpinKind::FoldyWouthuysen: return "S_FW";
    case SpinKind::Czachor: return "S_Cz";
    case SpinKind::Frenkel: return "S_F";
    case SpinKind::Chakrabarti: return "S_Ch";
    case SpinKind::Pryce: return "S_Pr";
    case SpinKind::FradkinGood: return "S_FG";
  }
  return "?";
}

SpinKind kind_from_string(const std::string& s) {
  for (SpinKind k : all_spin_kinds) {
    if (s == to_string(k) || s == short_name(k)) return k;
  }
  throw ConfigError("unknown spin kind: " + s);
}

bool needs_direction(SpinKind k) { return k == SpinKind::Pryce || k == SpinKind::FradkinGood; }

namespace {

void require_direction(SpinKind kind, const PhysicalConstants& k, const Momentum3& p) {
  if (needs_direction(kind) && p.norm() < degenerate_momentum_rel_cutoff * k.mc())
    throw DegenerateMomentum(std::string(to_string(kind)) + " spin operator is undefined at p = 0");
}

// p x (Sigma x p) = p^2 Sigma_i - p_i (p.Sigma)
std::array<Matrix4, 3> p_cross_sigma_cross_p(const Momentum3& p) {
  const Matrix4 pdS = dirac::sigma_dot_big(p);
  const double p2 = p.norm2();
  const auto& sig = matrices().sigma_big;
  std::array<Matrix4, 3> out;
  const double pc[3] = {p.x, p.y, p.z};
  for (int i = 0; i < 3; ++i) out[i] = cplx(p2, 0) * sig[i] - cplx(pc[i], 0) * pdS;
  return out;
}

std::array<Matrix4, 3> pauli_triplet() {
  const auto& sig = matrices().sigma_big;
  return {cplx(0.5, 0) * sig[0], cplx(0.5, 0) * sig[1], cplx(0.5, 0) * sig[2]};
}

std::array<Matrix4, 3> fw_triplet(const PhysicalConstants& k, const Momentum3& p) {
  const double e = dirac::p0(k, p);
  const auto pxa = dirac::p_cross_alpha(p);
  const auto trip = p_cross_sigma_cross_p(p);
  const auto& d = matrices();
  std::array<Matrix4, 3> out;
  for (int i = 0; i < 3; ++i)
    out[i] = cplx(0.5, 0) * d.sigma_big[i] + cplx(0, 0.5 / e) * d.beta * pxa[i] -
             cplx(0.5 / (e * (e + k.mc())), 0) * trip[i];
  return out;
}

std::array<Matrix4, 3> czachor_triplet(const PhysicalConstants& k, const Momentum3& p) {
  const double e = dirac::p0(k, p);
  const double e2 = e * e;
  const auto pxa = dirac::p_cross_alpha(p);
  const Matrix4 pdS = dirac::sigma_dot_big(p);
  const auto& d = matrices();
  const double pc[3] = {p.x, p.y, p.z};
  std::array<Matrix4, 3> out;
  for (int i = 0; i < 3; ++i)
    out[i] = cplx(0.5 * k.mc() * k.mc() / e2, 0) * d.sigma_big[i] +
             cplx(0, 0.5 * k.mc() / e2) * d.beta * pxa[i] + cplx(0.5 * pc[i] / e2, 0) * pdS;
  return out;
}

std::array<Matrix4, 3> frenkel_triplet(const PhysicalConstants& k, const Momentum3& p) {
  const auto pxa = dirac::p_cross_alpha(p);
  const auto& d = matrices();
  std::array<Matrix4, 3> out;
  for (int i = 0; i < 3; ++i)
    out[i] = cplx(0.5, 0) * d.sigma_big[i] + cplx(0, 0.5 / k.mc()) * d.beta * pxa[i];
  return out;
}

std::array<Matrix4, 3> chakrabarti_triplet(const PhysicalConstants& k, const Momentum3& p) {
  const double e = dirac::p0(k, p);
  const auto pxa = dirac::p_cross_alpha(p); // alpha x p = -(p x alpha)
  const auto trip = p_cross_sigma_cross_p(p);
  const auto& d = matrices();
  std::array<Matrix4, 3> out;
  for (int i = 0; i < 3; ++i)
    out[i] = cplx(0.5, 0) * d.sigma_big[i] - cplx(0, 0.5 / k.mc()) * pxa[i] +
             cplx(0.5 / (k.mc() * (k.mc() + e)), 0) * trip[i];
  return out;
}

std::array<Matrix4, 3> pryce_triplet(const Momentum3& p) {
  const Matrix4 pdS = dirac::sigma_dot_big(p);
  const auto& d = matrices();
  const Matrix4 one_minus_beta = Matrix4::identity() - d.beta;
  const double p2 = p.norm2();
  const double pc[3] = {p.x, p.y, p.z};
  std::array<Matrix4, 3> out;
  for (int i = 0; i < 3; ++i)
    out[i] = cplx(0.5, 0) * d.beta * d.sigma_big[i] +
             cplx(0.5 * pc[i] / p2, 0) * pdS * one_minus_beta;
  return out;
}

std::array<Matrix4, 3> fradkin_good_triplet(const PhysicalConstants& k, const Momentum3& p) {
  const Matrix4 pdS = dirac::sigma_dot_big(p);
  const auto& d = matrices();
  const double e = dirac::p0(k, p);
  const Matrix4 sgn = cplx(1.0 / (k.c * e), 0) * dirac::free_hamiltonian(k, p) - d.beta;
  const double p2 = p.norm2();
  const double pc[3] = {p.x, p.y, p.z};
  std::array<Matrix4, 3> out;
  for (int i = 0; i < 3; ++i)
    out[i] = cplx(0.5, 0) * d.beta * d.sigma_big[i] + cplx(0.5 * pc[i] / p2, 0) * pdS * sgn;
  return out;
}

} // namespace

SpinMatrixTriplet spin_matrices(SpinKind kind, const PhysicalConstants& k, const Momentum3& p) {
  require_direction(kind, k, p);
  SpinMatrixTriplet t{{}, kind, p, k};
  switch (kind) {
    case SpinKind::Pauli: t.S = pauli_triplet(); break;
    case SpinKind::FoldyWouthuysen: t.S = fw_triplet(k, p); break;
    case SpinKind::Czachor: t.S = czachor_triplet(k, p); break;
    case SpinKind::Frenkel: t.S = frenkel_triplet(k, p); break;
    case SpinKind::Chakrabarti: t.S = chakrabarti_triplet(k, p); break;
    case SpinKind::Pryce: t.S = pryce_triplet(p); break;
    case SpinKind::FradkinGood: t.S = fradkin_good_triplet(k, p); break;
  }
  return t;
}

Matrix4 spin_component(SpinKind kind, const PhysicalConstants& k, const Momentum3& p,
                       const SpinDirection& n) {
  const auto t = spin_matrices(kind, k, p);
  const Momentum3 nv = n.unit();
  return cplx(nv.x, 0) * t.S[0] + cplx(nv.y, 0) * t.S[1] + cplx(nv.z, 0) * t.S[2];
}

double squared_length(SpinKind kind, const PhysicalConstants& k, const Momentum3& p) {
  const double mc2 = k.mc() * k.mc();
  const double p2 = p.norm2();
  switch (kind) {
    case SpinKind::Czachor: return (3.0 * mc2 + p2) / (4.0 * mc2 + 4.0 * p2);
    case SpinKind::Frenkel: return (3.0 * mc2 + 2.0 * p2) / (4.0 * mc2);
    default: return 0.75;
  }
}

Matrix4 transform_fw(const PhysicalConstants& k, const Momentum3& p) {
  const double e = dirac::p0(k, p);
  const double den = std::sqrt(2.0 * e * (e + k.mc()));
  return cplx(1.0 / den, 0) *
         (cplx(e + k.mc(), 0) * Matrix4::identity() - matrices().beta * dirac::alpha_dot(p));
}

ChTransform transform_ch(const PhysicalConstants& k, const Momentum3& p) {
  const double e = dirac::p0(k, p);
  const double den = std::sqrt(2.0 * k.mc() * (e + k.mc()));
  const Matrix4 adp = dirac::alpha_dot(p);
  const Matrix4 base = cplx(e + k.mc(), 0) * Matrix4::identity();
  return {cplx(1.0 / den, 0) * (base + adp), cplx(1.0 / den, 0) * (base - adp)};
}

Matrix4 transform_pr(const Momentum3& p) {
  if (p.norm() == 0.0) throw DegenerateMomentum("Pryce transform is undefined at p = 0");
  const Mat2 sp = Mat2::sigma_dot(p) * cplx(0.0, 1.0 / p.norm());
  return Matrix4::from_blocks(Mat2::identity(), Mat2::zero(), Mat2::zero(), sp);
}

// ---------------------------------------------------------------------------
// closed-form eigensystems

namespace {

struct Rotation {
  Momentum3 axis;
  double angle; // rotation by angle about axis maps n to z
};

Rotation rotation_to_z(const Momentum3& n) {
  const Momentum3 z{0, 0, 1};
  const Momentum3 a = n.cross(z);
  const double s = a.norm();
  const double c = n.z;
  if (s < 1e-15) {
    if (c > 0) return {{1, 0, 0}, 0.0};
    return {{1, 0, 0}, M_PI}; // n = -z: rotate about x by pi
  }
  return {a * (1.0 / s), std::atan2(s, c)};
}

Momentum3 rotate(const Rotation& r, const Momentum3& v) {
  const double c = std::cos(r.angle), s = std::sin(r.angle);
  const Momentum3 axv = r.axis.cross(v);
  const double ad = r.axis.dot(v);
  return v * c + axv * s + r.axis * (ad * (1.0 - c));
}

// Spinor representation: D (v.Sigma) D^dag = (Rv).Sigma.
Matrix4 spinor_rotation(const Rotation& r) {
  const Matrix4 adS = dirac::sigma_dot_big(r.axis);
  return cplx(std::cos(r.angle / 2.0), 0) * Matrix4::identity() +
         cplx(0, -std::sin(r.angle / 2.0)) * adS;
}

void gram_schmidt_pair(Spinor4& a, Spinor4& b) {
  a = a.normalized();
  b = (b - a * a.dot(b)).normalized();
}

bool pairwise_orthogonal(const std::array<Spinor4, 4>& vs, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(vs[i].dot(vs[j])) > tol) return false;
  return true;
}

// Czachor eigenvectors for n = z.  The first two components carry p0 of the
// momentum component parallel to n (validated against the numeric
// eigensolver; with the perpendicular p0 the eigen residual is O(1)).
EigenSystem czachor_eigensystem_z(const PhysicalConstants& k, const Momentum3& p) {
  const double e = dirac::p0(k, p);
  const double a = dirac::p0(k, {0, 0, p.z}); // p0 of the parallel component
  const double lam = a / (2.0 * e);
  const cplx pp(p.x, p.y), pm(p.x, -p.y);
  const double mc = k.mc();
  EigenSystem out;
  out.eigenvalues = {lam, lam, -lam, -lam};
  if (std::abs(pp) < 1e-12 * std::max(mc, p.norm())) {
    // p parallel to n (or zero): the generic vectors degenerate, but here the
    // energy-basis spinors are shared eigenvectors and lam = 1/2
    const TwoSpinor up{1.0, 0.0}, dn{0.0, 1.0};
    out.eigenvectors = {dirac::u_spinor(k, up, p), dirac::v_spinor(k, up, p),
                        dirac::u_spinor(k, dn, p), dirac::v_spinor(k, dn, p)};
    out.orthogonal = true;
    return out;
  }
  out.eigenvectors[0] = Spinor4{{a * a + a * e, p.z * pp, 0.0, mc * pp}};
  out.eigenvectors[1] = Spinor4{{-p.z * pm, a * a - a * e, mc * pm, 0.0}};
  out.eigenvectors[2] = Spinor4{{-p.z * pm, a * a + a * e, mc * pm, 0.0}};
  out.eigenvectors[3] = Spinor4{{a * a - a * e, p.z * pp, 0.0, mc * pp}};
  // the raw closed-form pairs are not orthogonal; any basis of a degenerate
  // eigenspace is valid, so orthonormalize within each pair
  gram_schmidt_pair(out.eigenvectors[0], out.eigenvectors[1]);
  gram_schmidt_pair(out.eigenvectors[2], out.eigenvectors[3]);
  out.orthogonal = true;
  return out;
}

} // namespace

EigenSystem closed_form_eigensystem(SpinKind kind, const PhysicalConstants& k, const Momentum3& p,
                                    const SpinDirection& n) {
  require_direction(kind, k, p);
  const auto [chi_up, chi_dn] = dirac::chi_pair(n);
  const Momentum3 nv = n.unit();
  EigenSystem out;
  out.orthogonal = true;
  switch (kind) {
    case SpinKind::Pauli: {
      out.eigenvalues = {0.5, 0.5, -0.5, -0.5};
      out.eigenvectors = {dirac::u_spinor(k, chi_up, {}), dirac::v_spinor(k, chi_up, {}),
                          dirac::u_spinor(k, chi_dn, {}), dirac::v_spinor(k, chi_dn, {})};
      break;
    }
    case SpinKind::FoldyWouthuysen: {
      out.eigenvalues = {0.5, 0.5, -0.5, -0.5};
      out.eigenvectors = {dirac::u_spinor(k, chi_up, p), dirac::v_spinor(k, chi_up, p),
                          dirac::u_spinor(k, chi_dn, p), dirac::v_spinor(k, chi_dn, p)};
      break;
    }
    case SpinKind::Czachor: {
      const Rotation r = rotation_to_z(nv);
      EigenSystem ez = czachor_eigensystem_z(k, rotate(r, p));
      const Matrix4 d_back = spinor_rotation(r).dagger();
      out.eigenvalues = ez.eigenvalues;
      for (int i = 0; i < 4; ++i) out.eigenvectors[i] = d_back * ez.eigenvectors[i];
      break;
    }
    case SpinKind::Frenkel: {
      const Momentum3 p_perp = p - nv * p.dot(nv);
      const double lam = dirac::p0(k, p_perp) / (2.0 * k.mc());
      out.eigenvalues = {lam, lam, -lam, -lam};
      out.eigenvectors = {dirac::u_spinor(k, chi_up, p_perp), dirac::v_spinor(k, chi_up, p_perp),
                          dirac::u_spinor(k, chi_dn, p_perp), dirac::v_spinor(k, chi_dn, p_perp)};
      break;
    }
    case SpinKind::Chakrabarti: {
      out.eigenvalues = {0.5, 0.5, -0.5, -0.5};
      out.eigenvectors = {dirac::u_spinor(k, chi_up, p), dirac::v_spinor(k, chi_up, -p),
                          dirac::u_spinor(k, chi_dn, p), dirac::v_spinor(k, chi_dn, -p)};
      break;
    }
    case SpinKind::Pryce: {
      const Mat2 sp_hat = Mat2::sigma_dot(p * (1.0 / p.norm()));
      out.eigenvalues = {0.5, 0.5, -0.5, -0.5};
      out.eigenvectors = {Spinor4::from_blocks(chi_up, {}), Spinor4::from_blocks({}, sp_hat * chi_up),
                          Spinor4::from_blocks(chi_dn, {}), Spinor4::from_blocks({}, sp_hat * chi_dn)};
      break;
    }
    case SpinKind::FradkinGood: {
      out.eigenvalues = {0.5, 0.5, -0.5, -0.5};
      // the v sector pairs with the opposite chi relative to Foldy-Wouthuysen
      out.eigenvectors = {dirac::u_spinor(k, chi_up, p), dirac::v_spinor(k, chi_dn, p),
                          dirac::u_spinor(k, chi_dn, p), dirac::v_spinor(k, chi_up, p)};
      break;
    }
  }
  out.orthogonal = pairwise_orthogonal(out.eigenvectors, 1e-10);
  return out;
}

// ---------------------------------------------------------------------------
// identity reports

bool IdentityReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
}

double IdentityReport::max_residual() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.residual);
  return m;
}

namespace {

void add_entry(IdentityReport& rep, const std::string& name, const Matrix4& a, const Matrix4& b,
               double tol) {
  const double r = relative_residual(a, b);
  rep.entries.push_back({name, r, tol, r < tol});
}

} // namespace

IdentityReport verify_subspace_identities(const PhysicalConstants& k, const Momentum3& p,
                                          const SpinDirection& n, double tol) {
  if (p.norm() < degenerate_momentum_rel_cutoff * k.mc())
    throw DegenerateMomentum("subspace identities need |p| > 0");
  const Matrix4 lp = dirac::energy_projector(k, p, +1);
  const Matrix4 lm = dirac::energy_projector(k, p, -1);
  const Matrix4 sP = spin_component(SpinKind::Pauli, k, p, n);
  const Matrix4 sFW = spin_component(SpinKind::FoldyWouthuysen, k, p, n);
  const Matrix4 sCz = spin_component(SpinKind::Czachor, k, p, n);
  const Matrix4 sCh = spin_component(SpinKind::Chakrabarti, k, p, n);
  const Matrix4 sPr = spin_component(SpinKind::Pryce, k, p, n);
  const Matrix4 sFG = spin_component(SpinKind::FradkinGood, k, p, n);

  IdentityReport rep;
  add_entry(rep, "L+ S_P L+ = L+ S_Cz L+", lp * sP * lp, lp * sCz * lp, tol);
  add_entry(rep, "L- S_P L- = L- S_Cz L-", lm * sP * lm, lm * sCz * lm, tol);
  add_entry(rep, "S_FW L+ = S_Ch L+", sFW * lp, sCh * lp, tol);
  add_entry(rep, "S_FW L+ = S_Pr L+", sFW * lp, sPr * lp, tol);
  add_entry(rep, "S_FW L+ = S_FG L+", sFW * lp, sFG * lp, tol);
  add_entry(rep, "L- S_FW L- = L- S_Ch L-", lm * sFW * lm, lm * sCh * lm, tol);
  add_entry(rep, "S_FW L- = -S_FG L-", sFW * lm, -(sFG * lm), tol);
  add_entry(rep, "L+ S_FW L- = L+ S_Pr L-", lp * sFW * lm, lp * sPr * lm, tol);
  add_entry(rep, "L+ S_FW L- = L- S_FW L+", lp * sFW * lm, lm * sFW * lp, tol);
  add_entry(rep, "L- S_FW L+ = L- S_Pr L+", lm * sFW * lp, lm * sPr * lp, tol);
  return rep;
}

IdentityReport equivalent_forms_report(const PhysicalConstants& k, const Momentum3& p, double tol) {
  if (p.norm() < degenerate_momentum_rel_cutoff * k.mc())
    throw DegenerateMomentum("equivalent-form report needs |p| > 0");
  const auto& d = matrices();
  const double e = dirac::p0(k, p);
  const double mc = k.mc();
  const double p2 = p.norm2();
  const Matrix4 h0 = dirac::free_hamiltonian(k, p);
  const Matrix4 h0_inv = cplx(1.0 / (k.c * k.c * e * e), 0) * h0; // H0^2 = (c p0)^2
  const Matrix4 pdS = dirac::sigma_dot_big(p);
  const Matrix4 adp = dirac::alpha_dot(p);
  const auto pxa = dirac::p_cross_alpha(p);
  const auto pl = dirac::pauli_lubanski(k, p);
  const double pc[3] = {p.x, p.y, p.z};

  IdentityReport rep;

  // (H0 + m0 c^2)^-1 = (alpha.p + m0 c (beta - 1)) / (c p^2)
  const Matrix4 hpm_inv =
      cplx(1.0 / (k.c * p2), 0) * (adp + cplx(mc, 0) * (d.beta - Matrix4::identity()));
  add_entry(rep, "(H0+m0c^2)^-1 identity", hpm_inv * (h0 + cplx(k.mc2(), 0) * Matrix4::identity()),
            Matrix4::identity(), tol);

  const auto fw = spin_matrices(SpinKind::FoldyWouthuysen, k, p).S;
  const auto pr = spin_matrices(SpinKind::Pryce, k, p).S;
  const auto ch = spin_matrices(SpinKind::Chakrabarti, k, p).S;
  const auto cz = spin_matrices(SpinKind::Czachor, k, p).S;
  const auto pauli = spin_matrices(SpinKind::Pauli, k, p).S;
  const auto fg = spin_matrices(SpinKind::FradkinGood, k, p).S;

  const Matrix4 t_fw = transform_fw(k, p);
  const Matrix4 t_fw_inv = t_fw.dagger();
  const auto [t_ch, t_ch_inv] = transform_ch(k, p);
  const Matrix4 t_pr = transform_pr(p);

  for (int i = 0; i < 3; ++i) {
    const std::string ax = std::to_string(i + 1);

    // Foldy-Wouthuysen: transform definition + three published alternatives
    add_entry(rep, "S_FW_" + ax + " = T_FW S_P T_FW^-1", t_fw * pauli[i] * t_fw_inv, fw[i], tol);
    const Matrix4 fw_bar =
        cplx(1.0 / (2.0 * k.c * e), 0) *
        (cplx(k.mc2(), 0) * d.sigma_big[i] + cplx(0, k.c) * d.beta * pxa[i] +
         cplx(k.c * k.c * pc[i] / (k.c * e + k.mc2()), 0) * pdS);
    add_entry(rep, "S_FW_" + ax + " (Pryce 1948 form)", fw_bar, fw[i], tol);
    const Matrix4 fw_bb = cplx(1.0 / mc, 0) * (cplx(k.c * e, 0) * h0_inv * pl.W[i] -
                                               cplx(pc[i] / (e + mc), 0) * pl.W0);
    add_entry(rep, "S_FW_" + ax + " (Pauli-Lubanski form)", fw_bb, fw[i], tol);
    const Matrix4 fw_bbb = cplx(e / (2.0 * mc), 0) * d.sigma_big[i] -
                           cplx(pc[i] / (2.0 * mc * (mc + e)), 0) * pdS -
                           pxa[i] * (cplx(0, 1.0 / (2.0 * mc * k.c * e)) * h0);
    add_entry(rep, "S_FW_" + ax + " (Caban et al form)", fw_bbb, fw[i], tol);

    // Pryce: W-based definition + three published alternatives + transform
    const Matrix4 pr_ww =
        cplx(1.0 / mc, 0) *
        (pl.W[i] - pl.W0 * (cplx(k.c * pc[i], 0) * hpm_inv)); // W0/(H0/c + m0 c) p_i
    add_entry(rep, "S_Pr_" + ax + " (W W0 form)", pr_ww, pr[i], tol);
    const Matrix4 pr_a = cplx(0.5, 0) * d.beta * d.sigma_big[i] +
                         cplx(0.5 * k.c * pc[i], 0) * d.gamma5 *
                             (d.beta + Matrix4::identity()) * hpm_inv;
    add_entry(rep, "S_Pr_" + ax + " (gamma5 form)", pr_a, pr[i], tol);
    const Matrix4 pr_b =
        cplx(0.5, 0) * h0_inv *
        (cplx(k.mc2(), 0) * d.sigma_big[i] + cplx(0, k.c) * d.beta * pxa[i] +
         cplx(k.c * k.c * pc[i], 0) * pdS * hpm_inv);
    add_entry(rep, "S_Pr_" + ax + " (Pryce 1948 form)", pr_b, pr[i], tol);
    const Matrix4 pr_c = cplx(0.5, 0) * d.beta * d.sigma_big[i] +
                         cplx(0.5 * pc[i] / p2, 0) * d.gamma5 *
                             (d.beta + Matrix4::identity()) * adp;
    add_entry(rep, "S_Pr_" + ax + " (alpha.p form)", pr_c, pr[i], tol);
    add_entry(rep, "S_Pr_" + ax + " = T_Pr S_P T_Pr^-1", t_pr * pauli[i] * t_pr.dagger(), pr[i],
              tol);

    // Chakrabarti: transform definition + Guersey-Ryder form
    add_entry(rep, "S_Ch_" + ax + " = T_Ch S_P T_Ch^-1", t_ch * pauli[i] * t_ch_inv, ch[i], tol);
    const Matrix4 ch2 = cplx(e / (2.0 * mc), 0) * d.sigma_big[i] -
                        cplx(pc[i] / (2.0 * mc * (mc + e)), 0) * pdS +
                        cplx(0, -0.5 / mc) * pxa[i];
    add_entry(rep, "S_Ch_" + ax + " (Guersey-Ryder form)", ch2, ch[i], tol);

    // Czachor: Pauli-Lubanski definition + projector form
    add_entry(rep, "S_Cz_" + ax + " = W c H0^-1", pl.W[i] * (cplx(k.c, 0) * h0_inv), cz[i], tol);
    const Matrix4 lp = dirac::energy_projector(k, p, +1);
    const Matrix4 lm = dirac::energy_projector(k, p, -1);
    add_entry(rep, "S_Cz_" + ax + " (projector form)",
              cplx(0.5, 0) * (lp * d.sigma_big[i] * lp + lm * d.sigma_big[i] * lm), cz[i], tol);

    // Fradkin-Good via the Foldy-Wouthuysen transform
    add_entry(rep, "S_FG_" + ax + " = T_FW beta S_P T_FW^-1",
              t_fw * d.beta * pauli[i] * t_fw_inv, fg[i], tol);
  }
  return rep;
}

CommutatorReport commutator_check(SpinKind kind, const PhysicalConstants& k, const Momentum3& p) {
  const auto t = spin_matrices(kind, k, p);
  const Matrix4 h0 = dirac::free_hamiltonian(k, p);
  const double e = dirac::p0(k, p);
  const Matrix4 pdS = dirac::sigma_dot_big(p);
  const double pc[3] = {p.x, p.y, p.z};

  // commutator residuals are normalized by the product of the operand norms:
  // the roundoff floor of [A, B] scales with |A| |B|, not with the result
  const auto comm_residual = [](const Matrix4& a, const Matrix4& b, const Matrix4& rhs) {
    const double scale = std::max(1.0, a.frobenius_norm() * b.frobenius_norm());
    return (commutator(a, b) - rhs).frobenius_norm() / scale;
  };

  double algebra = 0.0;
  const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& [i, j, kk] : cyc) {
    Matrix4 rhs;
    switch (kind) {
      case SpinKind::Czachor:
        rhs = cplx(0, 1) * (t.S[kk] - cplx(pc[kk] / (2.0 * e * e), 0) * pdS);
        break;
      case SpinKind::Frenkel:
        rhs = cplx(0, 1) * (t.S[kk] + cplx(pc[kk] / (2.0 * k.mc() * k.mc()), 0) * pdS);
        break;
      case SpinKind::FradkinGood:
        rhs = cplx(0, 1) * t.S[kk] * (cplx(1.0 / (k.c * e), 0) * h0);
        break;
      default:
        rhs = cplx(0, 1) * t.S[kk];
        break;
    }
    algebra = std::max(algebra, comm_residual(t.S[i], t.S[j], rhs));
  }

  double h0_res = 0.0;
  const auto pxa = dirac::p_cross_alpha(p);
  const auto& d = matrices();
  for (int i = 0; i < 3; ++i) {
    Matrix4 rhs = Matrix4::zero();
    switch (kind) {
      case SpinKind::Pauli:
        // [H0, S_P] = i c (alpha x p); the cross-product order matters
        rhs = cplx(0, -k.c) * pxa[i];
        break;
      case SpinKind::Chakrabarti: {
        // [H0, S_Ch] = (i(p0/m0 + c beta)(alpha x p) + p x (Sigma x p)/m0);
        // the scalar-plus-beta factor acts from the left
        const Matrix4 fac =
            cplx(e / k.m0, 0) * Matrix4::identity() + cplx(k.c, 0) * d.beta;
        const Matrix4 trip = cplx(p.norm2(), 0) * d.sigma_big[i] - cplx(pc[i], 0) * pdS;
        rhs = cplx(0, -1) * fac * pxa[i] + cplx(1.0 / k.m0, 0) * trip;
        break;
      }
      default: break; // FW, Cz, F, Pr, FG commute with H0
    }
    h0_res = std::max(h0_res, comm_residual(h0, t.S[i], rhs));
  }
  return {kind, algebra, h0_res};
}

double chakrabarti_gaussian_closed_form(const PhysicalConstants& k, double pbar_x) {
  const double r = (pbar_x / k.mc()) * (pbar_x / k.mc());
  return 0.5 + r / (2.0 * std::sqrt(r + 1.0));
}

double chakrabarti_gaussian_expectation(const PhysicalConstants& k, double sigma, double pbar_x) {
  if (sigma < 0.0) throw DomainError("momentum width must be nonnegative");
  if (sigma == 0.0) return chakrabarti_gaussian_closed_form(k, pbar_x);
  // Gaussian-weighted 1D integral of the relativistic weight over +-12 sigma
  const auto& gl = gauss_legendre(200);
  double acc = 0.0;
  const double half = 12.0 * sigma;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double px = pbar_x + half * gl.nodes[i];
    const double w = half * gl.weights[i];
    const double r = (px / k.mc()) * (px / k.mc());
    acc += w * std::exp(-(px - pbar_x) * (px - pbar_x) / (2.0 * sigma * sigma)) * r /
           (2.0 * std::sqrt(r + 1.0));
  }
  return 0.5 + acc / (std::sqrt(2.0 * M_PI) * sigma);
}

} // namespace spinorlab::spin
