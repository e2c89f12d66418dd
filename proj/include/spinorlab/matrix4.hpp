#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "spinorlab/constants.hpp"

namespace spinorlab {

using cplx = std::complex<double>;

struct TwoSpinor {
  cplx a{0.0, 0.0};
  cplx b{0.0, 0.0};

  double norm() const { return std::sqrt(std::norm(a) + std::norm(b)); }
  cplx dot(const TwoSpinor& o) const { return std::conj(a) * o.a + std::conj(b) * o.b; }
};

// 2x2 complex matrix, used for the block structure of the Dirac representation.
struct Mat2 {
  std::array<cplx, 4> m{}; // row-major

  cplx& operator()(int i, int j) { return m[2 * i + j]; }
  const cplx& operator()(int i, int j) const { return m[2 * i + j]; }

  static Mat2 zero() { return {}; }
  static Mat2 identity() {
    Mat2 r;
    r(0, 0) = 1.0;
    r(1, 1) = 1.0;
    return r;
  }
  static Mat2 pauli(int i) {
    Mat2 r;
    switch (i) {
      case 0: r(0, 1) = 1.0; r(1, 0) = 1.0; break;
      case 1: r(0, 1) = cplx(0, -1); r(1, 0) = cplx(0, 1); break;
      default: r(0, 0) = 1.0; r(1, 1) = -1.0; break;
    }
    return r;
  }
  static Mat2 sigma_dot(const Momentum3& p) {
    Mat2 r;
    r(0, 0) = p.z;
    r(0, 1) = cplx(p.x, -p.y);
    r(1, 0) = cplx(p.x, p.y);
    r(1, 1) = -p.z;
    return r;
  }

  Mat2 operator*(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
    return r;
  }
  TwoSpinor operator*(const TwoSpinor& s) const {
    return {(*this)(0, 0) * s.a + (*this)(0, 1) * s.b, (*this)(1, 0) * s.a + (*this)(1, 1) * s.b};
  }
  Mat2 operator*(cplx s) const {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.m[k] = m[k] * s;
    return r;
  }
};

struct Spinor4 {
  std::array<cplx, 4> v{};

  cplx& operator[](int i) { return v[i]; }
  const cplx& operator[](int i) const { return v[i]; }

  Spinor4 operator+(const Spinor4& o) const {
    Spinor4 r;
    for (int i = 0; i < 4; ++i) r.v[i] = v[i] + o.v[i];
    return r;
  }
  Spinor4 operator-(const Spinor4& o) const {
    Spinor4 r;
    for (int i = 0; i < 4; ++i) r.v[i] = v[i] - o.v[i];
    return r;
  }
  Spinor4 operator*(cplx s) const {
    Spinor4 r;
    for (int i = 0; i < 4; ++i) r.v[i] = v[i] * s;
    return r;
  }

  // Conjugating inner product <this|o>.
  cplx dot(const Spinor4& o) const {
    cplx s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::conj(v[i]) * o.v[i];
    return s;
  }
  double norm2() const { return std::real(dot(*this)); }
  double norm() const { return std::sqrt(norm2()); }
  Spinor4 normalized() const {
    const double n = norm();
    return *this * cplx(1.0 / n, 0.0);
  }

  static Spinor4 from_blocks(const TwoSpinor& up, const TwoSpinor& lo) {
    return Spinor4{{up.a, up.b, lo.a, lo.b}};
  }
  TwoSpinor upper() const { return {v[0], v[1]}; }
  TwoSpinor lower() const { return {v[2], v[3]}; }
};

inline Spinor4 operator*(cplx s, const Spinor4& x) { return x * s; }

// Dense 4x4 complex matrix, row-major.  Carrier for everything in Dirac space.
class Matrix4 {
public:
  Matrix4() = default;

  cplx& operator()(int i, int j) { return m_[4 * i + j]; }
  const cplx& operator()(int i, int j) const { return m_[4 * i + j]; }
  cplx* data() { return m_.data(); }
  const cplx* data() const { return m_.data(); }

  static Matrix4 zero() { return {}; }
  static Matrix4 identity() {
    Matrix4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
  }
  static Matrix4 from_blocks(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
    Matrix4 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        r(i, j) = a(i, j);
        r(i, j + 2) = b(i, j);
        r(i + 2, j) = c(i, j);
        r(i + 2, j + 2) = d(i, j);
      }
    return r;
  }
  static Matrix4 diagonal(cplx d0, cplx d1, cplx d2, cplx d3) {
    Matrix4 r;
    r(0, 0) = d0;
    r(1, 1) = d1;
    r(2, 2) = d2;
    r(3, 3) = d3;
    return r;
  }

  Matrix4 operator+(const Matrix4& o) const {
    Matrix4 r;
    for (int k = 0; k < 16; ++k) r.m_[k] = m_[k] + o.m_[k];
    return r;
  }
  Matrix4 operator-(const Matrix4& o) const {
    Matrix4 r;
    for (int k = 0; k < 16; ++k) r.m_[k] = m_[k] - o.m_[k];
    return r;
  }
  Matrix4 operator-() const { return *this * cplx(-1.0, 0.0); }
  Matrix4 operator*(cplx s) const {
    Matrix4 r;
    for (int k = 0; k < 16; ++k) r.m_[k] = m_[k] * s;
    return r;
  }
  Matrix4 operator*(const Matrix4& o) const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        cplx s = 0.0;
        for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }
  Spinor4 operator*(const Spinor4& x) const {
    Spinor4 r;
    for (int i = 0; i < 4; ++i) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k) s += (*this)(i, k) * x[k];
      r[i] = s;
    }
    return r;
  }

  Matrix4 dagger() const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }
  cplx trace() const { return m_[0] + m_[5] + m_[10] + m_[15]; }
  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : m_) s += std::norm(e);
    return std::sqrt(s);
  }
  bool is_hermitian(double tol) const { return (*this - dagger()).frobenius_norm() <= tol; }

private:
  std::array<cplx, 16> m_{};
};

inline Matrix4 operator*(cplx s, const Matrix4& a) { return a * s; }

inline Matrix4 commutator(const Matrix4& a, const Matrix4& b) { return a * b - b * a; }
inline Matrix4 anticommutator(const Matrix4& a, const Matrix4& b) { return a * b + b * a; }

// Residual of a - b relative to the larger norm; 4x4 identities in this
// library are asserted as relative_residual < 1e-12.
inline double relative_residual(const Matrix4& a, const Matrix4& b) {
  const double scale = std::max({a.frobenius_norm(), b.frobenius_norm(), 1.0});
  return (a - b).frobenius_norm() / scale;
}

} // namespace spinorlab
