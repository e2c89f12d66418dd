#pragma once

#include <cstdint>
#include <vector>

#include "spinorlab/constants.hpp"
#include "spinorlab/spin_operators.hpp"

namespace spinorlab::spin {

// Seeded random (p, n) samples: momentum components uniform in
// [-3, 3] m0 c (resampled below the degenerate-momentum cutoff), direction
// uniform on the sphere.
struct RandomSample {
  Momentum3 p;
  SpinDirection n;
};
std::vector<RandomSample> sample_momenta(const PhysicalConstants& k, int count,
                                         std::uint64_t seed);

// Aggregated worst-case residuals of the full operator-algebra suite over a
// set of samples: per-family properties (Hermiticity pattern, squared
// lengths, commutators, eigenvalues), subspace identities, transform
// properties, and all equivalent operator forms.
struct AlgebraCheckResult {
  struct Entry {
    std::string name;
    double max_residual;
    double tol;
    bool pass;
  };
  std::vector<Entry> entries;
  int samples = 0;

  bool all_pass() const;
};

AlgebraCheckResult run_algebra_check(const PhysicalConstants& k, int samples, std::uint64_t seed);

} // namespace spinorlab::spin
