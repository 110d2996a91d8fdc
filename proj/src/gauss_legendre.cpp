#include "colombeau/gauss_legendre.hpp"

#include "colombeau/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace colombeau {

namespace {

QuadRule compute(int n) {
  if (n < 1) throw PreconditionError("gauss_legendre: node count must be >= 1");
  QuadRule r;
  r.nodes.resize(static_cast<size_t>(n));
  r.weights.resize(static_cast<size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[static_cast<size_t>(i)] = -x;
    r.nodes[static_cast<size_t>(n - 1 - i)] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[static_cast<size_t>(i)] = w;
    r.weights[static_cast<size_t>(n - 1 - i)] = w;
  }
  return r;
}

}  // namespace

const QuadRule& gauss_legendre(int n) {
  static std::map<int, QuadRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute(n)).first;
  return it->second;
}

}  // namespace colombeau
