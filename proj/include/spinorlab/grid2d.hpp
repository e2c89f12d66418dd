#pragma once

#include <cmath>

#include "spinorlab/errors.hpp"

namespace spinorlab::wp {

// Rectangular position grid with the FFT-ordered momentum lattice it induces.
// Point counts must be powers of two; the momentum lattice is symmetric about
// zero up to the single Nyquist point.
struct Grid2D {
  int nx = 0;
  int ny = 0;
  double x_min = 0.0, x_max = 0.0;
  double y_min = 0.0, y_max = 0.0;

  Grid2D() = default;
  Grid2D(int nx_, int ny_, double x_min_, double x_max_, double y_min_, double y_max_)
      : nx(nx_), ny(ny_), x_min(x_min_), x_max(x_max_), y_min(y_min_), y_max(y_max_) {
    validate();
  }

  void validate() const {
    const auto pow2 = [](int n) { return n >= 2 && (n & (n - 1)) == 0; };
    if (!pow2(nx) || !pow2(ny))
      throw ConfigError("Grid2D: point counts must be powers of two and >= 2");
    if (!(x_max > x_min) || !(y_max > y_min))
      throw ConfigError("Grid2D: domain bounds must be increasing");
  }

  double dx() const { return (x_max - x_min) / nx; }
  double dy() const { return (y_max - y_min) / ny; }
  double x(int i) const { return x_min + dx() * i; }
  double y(int j) const { return y_min + dy() * j; }

  double dpx() const { return 2.0 * M_PI / (nx * dx()); }
  double dpy() const { return 2.0 * M_PI / (ny * dy()); }
  // FFT ordering: 0, 1, ..., n/2-1, -n/2, ..., -1.
  double px(int i) const { return dpx() * (i < nx / 2 ? i : i - nx); }
  double py(int j) const { return dpy() * (j < ny / 2 ? j : j - ny); }

  long size() const { return static_cast<long>(nx) * ny; }
  long index(int ix, int iy) const { return static_cast<long>(ix) * ny + iy; }
};

} // namespace spinorlab::wp
