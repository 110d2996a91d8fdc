#pragma once

#include "colombeau/eps_grid.hpp"

#include <cstddef>
#include <vector>

namespace colombeau {

struct Sample {
  double eps;
  double magnitude;  // >= 0
};

/// Log-log least-squares result: magnitude ~ exp(intercept) * eps^slope.
struct OrderEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // max |log residual| over the fitted points
  size_t window_first = 0;
  size_t window_last = 0;      // inclusive
  size_t excluded_zeros = 0;   // exact zeros dropped from the regression
};

/// Inclusive index window into a sample sequence.
struct FitWindow {
  size_t first;
  size_t last;
};

/// Least-squares line of log(magnitude) against log(eps) over the window.
/// Zero magnitudes are excluded and counted. Throws IdenticallyZeroError
/// when nothing is left, InsufficientDataError below 4 usable points.
OrderEstimate fit_order(const std::vector<Sample>& samples, FitWindow window);

/// fit_order over the smallest half of the samples (asymptotic regime).
OrderEstimate fit_order(const std::vector<Sample>& samples);

/// Normalized Landau bound with C = 1: true iff magnitude <= eps^p for
/// every sample with eps < cutoff. Non-strict, so exact powers pass their
/// own order. Zero magnitudes satisfy every order. Throws if no sample
/// lies below the cutoff (empty check).
bool landau_check(const std::vector<Sample>& samples, double p, double cutoff = 1.0);

}  // namespace colombeau
