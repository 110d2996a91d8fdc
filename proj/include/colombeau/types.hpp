#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace colombeau {

using Cplx = std::complex<double>;
using Vec = Eigen::VectorXd;

/// Multi-index alpha in N_0^n; empty means alpha = 0 in any dimension.
using MultiIndex = std::vector<int>;

inline int order_of(const MultiIndex& a) {
  int s = 0;
  for (int k : a) s += k;
  return s;
}

inline bool leq(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline MultiIndex minus(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Product of per-axis binomials, the coefficient in the multivariate
/// Leibniz rule.
inline double multi_binomial(const MultiIndex& a, const MultiIndex& b) {
  double r = 1.0;
  for (size_t i = 0; i < a.size(); ++i) r *= binomial(a[i], b[i]);
  return r;
}

/// All multi-indices of dimension n with |alpha| <= max_order, ordered by
/// total order then lexicographically.
std::vector<MultiIndex> multi_indices_up_to(int n, int max_order);

/// All beta <= alpha componentwise (for Leibniz sums).
std::vector<MultiIndex> sub_indices(const MultiIndex& alpha);

inline double pow_vec(const Vec& y, const MultiIndex& a) {
  double r = 1.0;
  for (size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < a[i]; ++k) r *= y[static_cast<Eigen::Index>(i)];
  return r;
}

inline Vec vec1(double x) {
  Vec v(1);
  v[0] = x;
  return v;
}

inline Vec vec2(double x, double y) {
  Vec v(2);
  v[0] = x;
  v[1] = y;
  return v;
}

}  // namespace colombeau
