#pragma once

#include <cstddef>
#include <vector>

namespace spinorlab {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached; Newton iteration on the Legendre recurrence, accurate to ~1e-15.
const GaussLegendre& gauss_legendre(int n);

// Nodes/weights mapped to (0, 1).
struct MappedRule {
  std::vector<double> x;
  std::vector<double> w;
};
MappedRule gauss_legendre_01(int n);

} // namespace spinorlab
