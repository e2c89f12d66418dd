#pragma once

// Test-only numeric oracles, independent of the library's implementation
// paths.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracles {

// Adaptive Simpson quadrature on [a, b].
inline double adaptive_simpson_impl(const std::function<double(double)>& f, double a, double b,
                                    double fa, double fm, double fb, double whole, double tol,
                                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw std::runtime_error("adaptive_simpson: max depth reached");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_impl(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson_impl(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int depth = 60) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_impl(f, a, b, fa, fm, fb, whole, tol, depth);
}

// The only spherical Bessel orders the oracles need, in explicit closed form
// so they stay independent of the library's special-function path.
inline double j0(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }
inline double j1(double x) {
  if (std::abs(x) < 1e-6) return x / 3.0;
  return std::sin(x) / (x * x) - std::cos(x) / x;
}
inline double sph_j(int l, double x) { return l == 0 ? j0(x) : j1(x); }

// Integral over [0, inf) for integrands with an e^{-decay r} envelope:
// truncate where the envelope is negligible, split into unit panels.
inline double integral_0_inf(const std::function<double(double)>& f, double decay,
                             double tol = 1e-12) {
  const double r_max = 80.0 / decay;
  double total = 0.0;
  const int panels = 64;
  for (int k = 0; k < panels; ++k) {
    const double a = r_max * k / panels;
    const double b = r_max * (k + 1) / panels;
    total += adaptive_simpson(f, a, b, tol / panels);
  }
  return total;
}

} // namespace oracles
