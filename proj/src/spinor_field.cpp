#include "spinorlab/spinor_field.hpp"

#include <fftw3.h>
#include <omp.h>

#include <cstring>
#include <mutex>

namespace spinorlab::wp {

namespace {
// FFTW plan creation is not thread-safe; execution via the new-array
// interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
} // namespace

struct SpinorField2D::FftPlans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  ~FftPlans() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

void SpinorField2D::FftwDeleter::operator()(cplx* p) const { fftw_free(p); }

SpinorField2D::SpinorField2D(const Grid2D& grid, Rep rep) : grid_(grid), rep_(rep) {
  grid_.validate();
  allocate();
  build_phases();
}

SpinorField2D::SpinorField2D(const SpinorField2D& other)
    : grid_(other.grid_),
      rep_(other.rep_),
      plans_(other.plans_),
      phase_fwd_x_(other.phase_fwd_x_),
      phase_fwd_y_(other.phase_fwd_y_),
      phase_bwd_x_(other.phase_bwd_x_),
      phase_bwd_y_(other.phase_bwd_y_) {
  const long n = grid_.size();
  for (int c = 0; c < 4; ++c) {
    comp_[c].reset(static_cast<cplx*>(fftw_malloc(sizeof(cplx) * n)));
    std::memcpy(comp_[c].get(), other.comp_[c].get(), sizeof(cplx) * n);
  }
}

SpinorField2D& SpinorField2D::operator=(const SpinorField2D& other) {
  if (this == &other) return *this;
  SpinorField2D tmp(other);
  *this = std::move(tmp);
  return *this;
}

void SpinorField2D::allocate() {
  const long n = grid_.size();
  for (int c = 0; c < 4; ++c) {
    comp_[c].reset(static_cast<cplx*>(fftw_malloc(sizeof(cplx) * n)));
    std::fill_n(comp_[c].get(), n, cplx(0.0, 0.0));
  }
  plans_ = std::make_shared<FftPlans>();
  std::lock_guard<std::mutex> lock(planner_mutex());
  auto* buf = reinterpret_cast<fftw_complex*>(comp_[0].get());
  // FFTW_ESTIMATE keeps planning deterministic and leaves the buffer intact
  plans_->forward = fftw_plan_dft_2d(grid_.nx, grid_.ny, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  plans_->backward = fftw_plan_dft_2d(grid_.nx, grid_.ny, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
}

void SpinorField2D::build_phases() {
  // forward: psi~(p) = (dx dy / 2pi) e^{-i p.r_min} FFT[psi]
  // backward: psi(r) = (dpx dpy / 2pi) IFFT[ e^{+i p.r_min} psi~ ]
  phase_fwd_x_.resize(grid_.nx);
  phase_bwd_x_.resize(grid_.nx);
  phase_fwd_y_.resize(grid_.ny);
  phase_bwd_y_.resize(grid_.ny);
  const double fx = grid_.dx() / std::sqrt(2.0 * M_PI);
  const double bx = grid_.dpx() / std::sqrt(2.0 * M_PI);
  for (int i = 0; i < grid_.nx; ++i) {
    phase_fwd_x_[i] = std::polar(fx, -grid_.px(i) * grid_.x_min);
    phase_bwd_x_[i] = std::polar(bx, grid_.px(i) * grid_.x_min);
  }
  const double fy = grid_.dy() / std::sqrt(2.0 * M_PI);
  const double by = grid_.dpy() / std::sqrt(2.0 * M_PI);
  for (int j = 0; j < grid_.ny; ++j) {
    phase_fwd_y_[j] = std::polar(fy, -grid_.py(j) * grid_.y_min);
    phase_bwd_y_[j] = std::polar(by, grid_.py(j) * grid_.y_min);
  }
}

double SpinorField2D::norm2(Exec exec) const {
  const long n = grid_.size();
  const double cell = rep_ == Rep::position ? grid_.dx() * grid_.dy() : grid_.dpx() * grid_.dpy();
  // fixed per-row chunks, summed in row order: bit-identical for any policy
  std::vector<double> partials(grid_.nx, 0.0);
  const auto body = [&](int ix) {
    double acc = 0.0;
    for (int iy = 0; iy < grid_.ny; ++iy) {
      const long idx = grid_.index(ix, iy);
      for (int c = 0; c < 4; ++c) acc += std::norm(comp_[c][idx]);
    }
    partials[ix] = acc;
  };
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (int ix = 0; ix < grid_.nx; ++ix) body(ix);
  } else {
    for (int ix = 0; ix < grid_.nx; ++ix) body(ix);
  }
  (void)n;
  return sum_in_order(partials) * cell;
}

void SpinorField2D::scale(cplx factor) {
  const long n = grid_.size();
  for (int c = 0; c < 4; ++c)
    for (long k = 0; k < n; ++k) comp_[c][k] *= factor;
}

void SpinorField2D::to_momentum(Exec exec) {
  if (rep_ == Rep::momentum) return;
  const int comps = 4;
  // the four component transforms are independent; new-array execution is
  // thread-safe
#pragma omp parallel for schedule(static) num_threads(exec == Exec::openmp ? comps : 1)
  for (int c = 0; c < comps; ++c) {
    auto* buf = reinterpret_cast<fftw_complex*>(comp_[c].get());
    fftw_execute_dft(plans_->forward, buf, buf);
    for (int ix = 0; ix < grid_.nx; ++ix) {
      const cplx fx = phase_fwd_x_[ix];
      cplx* row = comp_[c].get() + grid_.index(ix, 0);
      for (int iy = 0; iy < grid_.ny; ++iy) row[iy] *= fx * phase_fwd_y_[iy];
    }
  }
  rep_ = Rep::momentum;
}

void SpinorField2D::to_position(Exec exec) {
  if (rep_ == Rep::position) return;
  const int comps = 4;
#pragma omp parallel for schedule(static) num_threads(exec == Exec::openmp ? comps : 1)
  for (int c = 0; c < comps; ++c) {
    for (int ix = 0; ix < grid_.nx; ++ix) {
      const cplx bx = phase_bwd_x_[ix];
      cplx* row = comp_[c].get() + grid_.index(ix, 0);
      for (int iy = 0; iy < grid_.ny; ++iy) row[iy] *= bx * phase_bwd_y_[iy];
    }
    auto* buf = reinterpret_cast<fftw_complex*>(comp_[c].get());
    fftw_execute_dft(plans_->backward, buf, buf);
  }
  rep_ = Rep::position;
}

} // namespace spinorlab::wp
