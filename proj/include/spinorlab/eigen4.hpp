#pragma once

#include <array>

#include "spinorlab/matrix4.hpp"

namespace spinorlab {

// LAPACK-backed eigensolvers for 4x4 problems.  The Hermitian path (zheev)
// returns ascending eigenvalues and an orthonormal basis; the general path
// (zgeev) is needed for the non-Hermitian Chakrabarti operator and returns
// right eigenvectors only.

struct HermitianEigen4 {
  std::array<double, 4> values{};   // ascending
  std::array<Spinor4, 4> vectors{}; // orthonormal, vectors[k] <-> values[k]
};

struct GeneralEigen4 {
  std::array<cplx, 4> values{};
  std::array<Spinor4, 4> vectors{}; // right eigenvectors, unit norm
};

HermitianEigen4 eig_hermitian(const Matrix4& a);
GeneralEigen4 eig_general(const Matrix4& a);

// Rank-deficient-friendly comparison helper: spectral projector onto the
// span of eigenvectors whose eigenvalue is within tol of lambda.
Matrix4 spectral_projector(const HermitianEigen4& e, double lambda, double tol);

} // namespace spinorlab
