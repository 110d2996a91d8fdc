#include "colombeau/order_fit.hpp"

#include "colombeau/errors.hpp"

#include <cmath>

namespace colombeau {

OrderEstimate fit_order(const std::vector<Sample>& samples, FitWindow window) {
  if (window.first > window.last || window.last >= samples.size())
    throw PreconditionError("fit_order: empty or out-of-range window");

  std::vector<double> xs, ys;
  size_t zeros = 0;
  for (size_t i = window.first; i <= window.last; ++i) {
    const auto& s = samples[i];
    if (s.magnitude < 0.0) throw PreconditionError("fit_order: negative magnitude");
    if (s.magnitude == 0.0) {
      ++zeros;
      continue;
    }
    xs.push_back(std::log(s.eps));
    ys.push_back(std::log(s.magnitude));
  }
  if (xs.empty()) throw IdenticallyZeroError("fit_order: identically zero on window");
  if (xs.size() < 4) throw InsufficientDataError("fit_order: fewer than 4 usable points in window");

  const size_t n = xs.size();
  double xbar = 0.0, ybar = 0.0;
  for (size_t i = 0; i < n; ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= static_cast<double>(n);
  ybar /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  OrderEstimate est;
  est.slope = sxy / sxx;
  est.intercept = ybar - est.slope * xbar;
  est.window_first = window.first;
  est.window_last = window.last;
  est.excluded_zeros = zeros;
  for (size_t i = 0; i < n; ++i)
    est.residual = std::max(est.residual, std::abs(ys[i] - (est.intercept + est.slope * xs[i])));
  return est;
}

OrderEstimate fit_order(const std::vector<Sample>& samples) {
  if (samples.empty()) throw PreconditionError("fit_order: no samples");
  return fit_order(samples, FitWindow{samples.size() / 2, samples.size() - 1});
}

bool landau_check(const std::vector<Sample>& samples, double p, double cutoff) {
  bool any = false;
  bool ok = true;
  for (const auto& s : samples) {
    if (!(s.eps < cutoff)) continue;
    any = true;
    if (s.magnitude == 0.0) continue;
    if (!(s.magnitude <= std::pow(s.eps, p))) ok = false;
  }
  if (!any) throw PreconditionError("landau_check: no sample below cutoff");
  return ok;
}

}  // namespace colombeau
