#pragma once

#include <memory>
#include <vector>

#include "spinorlab/exec.hpp"
#include "spinorlab/grid2d.hpp"
#include "spinorlab/matrix4.hpp"

namespace spinorlab::wp {

enum class Rep {
  position,
  momentum,
};

// Complex 4-spinor field on a 2D grid with dual position/momentum
// representation.  The momentum values follow the continuum convention
//   psi~(p) = (1/2pi) int psi(r) e^{-i p.r} d^2 r,
// so changing representation is unitary in the L2 norms
// sum |psi|^2 dx dy  <->  sum |psi~|^2 dpx dpy.
class SpinorField2D {
public:
  SpinorField2D(const Grid2D& grid, Rep rep);
  SpinorField2D(const SpinorField2D& other);
  SpinorField2D& operator=(const SpinorField2D& other);
  SpinorField2D(SpinorField2D&&) noexcept = default;
  SpinorField2D& operator=(SpinorField2D&&) noexcept = default;
  ~SpinorField2D() = default;

  const Grid2D& grid() const { return grid_; }
  Rep rep() const { return rep_; }

  cplx* component(int c) { return comp_[c].get(); }
  const cplx* component(int c) const { return comp_[c].get(); }

  Spinor4 at(long idx) const {
    return Spinor4{{comp_[0][idx], comp_[1][idx], comp_[2][idx], comp_[3][idx]}};
  }
  void set(long idx, const Spinor4& s) {
    for (int c = 0; c < 4; ++c) comp_[c][idx] = s[c];
  }

  double norm2(Exec exec = Exec::serial) const;
  double norm(Exec exec = Exec::serial) const { return std::sqrt(norm2(exec)); }
  void scale(cplx factor);

  void to_momentum(Exec exec = Exec::openmp);
  void to_position(Exec exec = Exec::openmp);

private:
  struct FftPlans;

  Grid2D grid_;
  Rep rep_;
  struct FftwDeleter {
    void operator()(cplx* p) const;
  };
  std::array<std::unique_ptr<cplx[], FftwDeleter>, 4> comp_;
  std::shared_ptr<FftPlans> plans_; // shared across copies of the same geometry
  std::vector<cplx> phase_fwd_x_, phase_fwd_y_; // e^{-i p r_min} with measure factors
  std::vector<cplx> phase_bwd_x_, phase_bwd_y_;

  void allocate();
  void build_phases();
};

} // namespace spinorlab::wp
