#pragma once

#include "colombeau/types.hpp"

#include <map>

namespace colombeau {

/// Sparse multivariate polynomial with real coefficients. Small by
/// construction (factory polynomials and bump-kernel numerators), so a
/// map keyed by exponent vector is plenty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int dim) : dim_(dim) {}

  static Polynomial constant(int dim, double c);
  static Polynomial monomial(int dim, const MultiIndex& a, double c = 1.0);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  double coeff(const MultiIndex& a) const;
  void add_term(const MultiIndex& a, double c);

  double operator()(const Vec& y) const;

  Polynomial derivative(int axis) const;
  Polynomial derivative(const MultiIndex& alpha) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double c, const Polynomial& p);

  const std::map<MultiIndex, double>& terms() const { return terms_; }

 private:
  int dim_ = 1;
  std::map<MultiIndex, double> terms_;
};

}  // namespace colombeau
