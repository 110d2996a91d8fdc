#pragma once

#include <vector>

namespace colombeau {

struct QuadRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

/// Gauss-Legendre nodes and weights on [-1,1], Newton iteration on the
/// Legendre recurrence. Results are cached per node count.
const QuadRule& gauss_legendre(int n);

}  // namespace colombeau
