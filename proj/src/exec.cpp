#include "spinorlab/exec.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace spinorlab {

int apply_thread_cap_from_env() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("SPINORLAB_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1 && cap < n) n = cap;
    } catch (...) {
      // ignore malformed values; keep the OpenMP default
    }
  }
  omp_set_num_threads(n);
  return n;
}

} // namespace spinorlab
