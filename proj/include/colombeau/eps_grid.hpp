#pragma once

#include "colombeau/errors.hpp"

#include <cmath>
#include <vector>

namespace colombeau {

/// Strictly decreasing geometric grid eps_i = base^i, i = start_exp..end_exp,
/// standing in for the index set (0,1]. Geometric spacing makes log-log fits
/// of pure powers exact.
class EpsGrid {
 public:
  EpsGrid(double base, int start_exp, int end_exp) : base_(base), start_(start_exp), end_(end_exp) {
    if (!(base > 0.0 && base < 1.0)) throw PreconditionError("EpsGrid: base must be in (0,1)");
    if (start_exp < 1 || end_exp < start_exp) throw PreconditionError("EpsGrid: bad exponent range");
    if (end_exp - start_exp + 1 < 8) throw PreconditionError("EpsGrid: at least 8 points required");
    values_.reserve(static_cast<size_t>(end_exp - start_exp + 1));
    for (int i = start_exp; i <= end_exp; ++i) values_.push_back(std::pow(base, i));
  }

  static EpsGrid standard() { return EpsGrid(0.5, 4, 36); }

  double base() const { return base_; }
  int start_exp() const { return start_; }
  int end_exp() const { return end_; }
  size_t size() const { return values_.size(); }
  double operator[](size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  /// Index range [first, size) of the smallest half of the grid, the
  /// default asymptotic fit window.
  size_t asymptotic_start() const { return values_.size() / 2; }

 private:
  double base_;
  int start_, end_;
  std::vector<double> values_;
};

}  // namespace colombeau
