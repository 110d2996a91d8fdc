#include "colombeau/quadrature.hpp"

namespace colombeau {

namespace {

template <typename T>
T tensor_integrate(const std::function<T(const Vec&)>& f, const Box& box, int nodes) {
  const QuadRule& rule = gauss_legendre(nodes);
  const int n = box.dim();
  std::vector<int> idx(static_cast<size_t>(n), 0);
  Vec y(n);
  T sum{};
  while (true) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
      size_t k = static_cast<size_t>(idx[static_cast<size_t>(i)]);
      double half = 0.5 * (box.hi[i] - box.lo[i]);
      y[i] = box.lo[i] + half * (rule.nodes[k] + 1.0);
      w *= half * rule.weights[k];
    }
    sum += w * f(y);
    int i = 0;
    while (i < n) {
      if (++idx[static_cast<size_t>(i)] < nodes) break;
      idx[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return sum;
}

}  // namespace

double integrate(const std::function<double(const Vec&)>& f, const Box& box, int nodes_per_axis) {
  return tensor_integrate<double>(f, box, nodes_per_axis);
}

Cplx integrate_cplx(const std::function<Cplx(const Vec&)>& f, const Box& box, int nodes_per_axis) {
  return tensor_integrate<Cplx>(f, box, nodes_per_axis);
}

}  // namespace colombeau
