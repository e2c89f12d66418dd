#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinorlab/constants.hpp"
#include "spinorlab/dirac.hpp"
#include "spinorlab/matrix4.hpp"

namespace spinorlab::spin {

enum class SpinKind {
  Pauli,
  FoldyWouthuysen,
  Czachor,
  Frenkel,
  Chakrabarti,
  Pryce,
  FradkinGood,
};

inline constexpr std::array<SpinKind, 7> all_spin_kinds = {
    SpinKind::Pauli,      SpinKind::FoldyWouthuysen, SpinKind::Czachor, SpinKind::Frenkel,
    SpinKind::Chakrabarti, SpinKind::Pryce,          SpinKind::FradkinGood,
};

const char* to_string(SpinKind k);
const char* short_name(SpinKind k); // column labels: S_P, S_FW, S_Cz, S_F, S_Ch, S_Pr, S_FG
SpinKind kind_from_string(const std::string& s);

// Pryce and Fradkin-Good divide by |p|^2; below this cutoff (relative
// to m0 c) the direction p/|p| is undefined.
inline constexpr double degenerate_momentum_rel_cutoff = 1e-12;
bool needs_direction(SpinKind k);

struct SpinMatrixTriplet {
  std::array<Matrix4, 3> S;
  SpinKind kind;
  Momentum3 p;
  PhysicalConstants constants;
};

// Momentum-parametrized spin matrix triplet built from each operator's most
// explicit algebraic form.  Throws DegenerateMomentum for Pryce and
// Fradkin-Good near p = 0.
SpinMatrixTriplet spin_matrices(SpinKind kind, const PhysicalConstants& k, const Momentum3& p);

// n.S for the given kind.
Matrix4 spin_component(SpinKind kind, const PhysicalConstants& k, const Momentum3& p,
                       const SpinDirection& n);

// The exact squared-length scalar s with sum_i S_i^2 == s * I.
double squared_length(SpinKind kind, const PhysicalConstants& k, const Momentum3& p);

// ---- similarity / boost transforms -----------------------------------------

// Unitary Foldy-Wouthuysen transform; T^-1 H0 T = c beta p0, T (Sigma/2) T^-1 = S_FW.
Matrix4 transform_fw(const PhysicalConstants& k, const Momentum3& p);

// Non-unitary Chakrabarti boost; T T_inv = I, T^dag = beta T_inv beta,
// T H0 T_inv = c beta p0 + h with h strictly lower-block.
struct ChTransform {
  Matrix4 T;
  Matrix4 T_inv;
};
ChTransform transform_ch(const PhysicalConstants& k, const Momentum3& p);

// Unitary Pryce transform diag(I2, i sigma.p/|p|); throws at p = 0.
Matrix4 transform_pr(const Momentum3& p);

// ---- eigensystems -----------------------------------------------------------

struct EigenSystem {
  std::array<double, 4> eigenvalues;  // ordered (up, up, down, down)
  std::array<Spinor4, 4> eigenvectors;
  bool orthogonal; // pairwise orthogonality of the closed-form set
};

// Closed-form eigenpairs of n.S per operator family.  The Czachor closed
// forms exist for n = z; other directions are obtained by rotating p into
// the frame where n = z and rotating the vectors back.
EigenSystem closed_form_eigensystem(SpinKind kind, const PhysicalConstants& k, const Momentum3& p,
                                    const SpinDirection& n);

// ---- identity checks ---------------------------------------------------------

struct IdentityReport {
  struct Entry {
    std::string name;
    double residual;
    double tol;
    bool pass;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
  double max_residual() const;
};

// Energy-subspace identities relating the seven operators for a given (p, n).
IdentityReport verify_subspace_identities(const PhysicalConstants& k, const Momentum3& p,
                                          const SpinDirection& n, double tol = 1e-12);

// Every equivalent published form of each operator, checked against the
// primary construction.  These catch transcription errors in spin_matrices.
IdentityReport equivalent_forms_report(const PhysicalConstants& k, const Momentum3& p,
                                       double tol = 1e-12);

struct CommutatorReport {
  SpinKind kind;
  double algebra_residual; // residual of the operator's stated commutation relation
  double h0_residual;      // residual of [H0, S] against its stated value
};
CommutatorReport commutator_check(SpinKind kind, const PhysicalConstants& k, const Momentum3& p);

// ---- Chakrabarti Gaussian pathology ------------------------------------------

// <S_Ch,3> for the Gaussian packet of momentum width sigma centered at
// (pbar_x, 0, 0); sigma = 0 selects the closed-form limit, which exceeds 1/2
// for every pbar_x != 0.
double chakrabarti_gaussian_expectation(const PhysicalConstants& k, double sigma, double pbar_x);
double chakrabarti_gaussian_closed_form(const PhysicalConstants& k, double pbar_x);

} // namespace spinorlab::spin
