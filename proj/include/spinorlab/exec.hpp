#pragma once

#include <cstddef>
#include <vector>

namespace spinorlab {

// Every hot kernel exists in a serial reference variant and an OpenMP
// variant.  Both share the same fixed chunk decomposition, and chunk partial
// sums are always combined in chunk order, so results are bit-identical
// regardless of policy or thread count.
enum class Exec {
  serial,
  openmp,
};

// Honors SPINORLAB_THREADS if set (caps OpenMP parallelism); call once at
// program start.  Returns the applied thread count.
int apply_thread_cap_from_env();

// Deterministic reduction: partials[i] computed independently (possibly in
// parallel), summed serially in index order.
inline double sum_in_order(const std::vector<double>& partials) {
  double s = 0.0;
  for (const double v : partials) s += v;
  return s;
}

} // namespace spinorlab
