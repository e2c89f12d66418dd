#include "spinorlab/eigen4.hpp"

#include <lapacke.h>

#include <stdexcept>

namespace spinorlab {

HermitianEigen4 eig_hermitian(const Matrix4& a) {
  std::array<cplx, 16> work; // zheev overwrites the input with eigenvectors
  for (int k = 0; k < 16; ++k) work[k] = a.data()[k];
  std::array<double, 4> w{};
  const lapack_int info =
      LAPACKE_zheev(LAPACK_ROW_MAJOR, 'V', 'U', 4,
                    reinterpret_cast<lapack_complex_double*>(work.data()), 4, w.data());
  if (info != 0) throw std::runtime_error("zheev failed, info=" + std::to_string(info));
  HermitianEigen4 out;
  out.values = w;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i) out.vectors[k][i] = work[4 * i + k]; // column k
  return out;
}

GeneralEigen4 eig_general(const Matrix4& a) {
  std::array<cplx, 16> in;
  for (int k = 0; k < 16; ++k) in[k] = a.data()[k];
  std::array<cplx, 4> w{};
  std::array<cplx, 16> vr{};
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_ROW_MAJOR, 'N', 'V', 4, reinterpret_cast<lapack_complex_double*>(in.data()), 4,
      reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 4,
      reinterpret_cast<lapack_complex_double*>(vr.data()), 4);
  if (info != 0) throw std::runtime_error("zgeev failed, info=" + std::to_string(info));
  GeneralEigen4 out;
  out.values = w;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i) out.vectors[k][i] = vr[4 * i + k];
  return out;
}

Matrix4 spectral_projector(const HermitianEigen4& e, double lambda, double tol) {
  Matrix4 proj = Matrix4::zero();
  for (int k = 0; k < 4; ++k) {
    if (std::abs(e.values[k] - lambda) > tol) continue;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) proj(i, j) += e.vectors[k][i] * std::conj(e.vectors[k][j]);
  }
  return proj;
}

} // namespace spinorlab
