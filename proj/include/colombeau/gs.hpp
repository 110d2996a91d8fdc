#pragma once

#include "colombeau/box.hpp"
#include "colombeau/eps_grid.hpp"
#include "colombeau/types.hpp"
#include "colombeau/verdict.hpp"

#include <functional>
#include <optional>

namespace colombeau {

/// eps-indexed net of smooth functions on Omega, with closed-form
/// y-derivative evaluators up to a declared order.
class FunctionNet {
 public:
  using Rule = std::function<Cplx(double, const Vec&, const MultiIndex&)>;

  FunctionNet(Domain domain, int deriv_order, Rule rule);

  int dim() const { return domain_.dim(); }
  const Domain& domain() const { return domain_; }
  int deriv_order() const { return deriv_order_; }

  Cplx operator()(double eps, const Vec& y) const;
  Cplx deriv(double eps, const Vec& y, const MultiIndex& alpha) const;

  FunctionNet derive(int axis) const;

  friend FunctionNet operator+(const FunctionNet& u, const FunctionNet& v);
  friend FunctionNet operator*(const FunctionNet& u, const FunctionNet& v);
  friend FunctionNet operator*(Cplx c, const FunctionNet& u);

 private:
  Domain domain_;
  int deriv_order_;
  Rule rule_;
};

/// Generalized number in the G^s setting: a bare rule on (0,1].
struct GenNumberGs {
  std::function<Cplx(double)> rule;

  Cplx operator()(double eps) const { return rule(eps); }
};

/// Generalized point in the G^s setting, optionally with the compact
/// support certificate (rule(eps) in K for eps < eta).
struct GenPointGs {
  std::function<Vec(double)> rule;
  std::optional<Box> support_box;
  double eta = 1.0;

  Vec operator()(double eps) const { return rule(eps); }
  bool compactly_supported() const { return support_box.has_value(); }
};

struct GsConfig {
  int n_max = 12;   // moderateness bound exponent
  int m_max = 8;    // negligibility orders swept
};

/// Moderateness sweep: for every |alpha| <= alpha_max the net
/// eps -> sup_{K-grid} |d^alpha u_eps| must obey the C=1 bound eps^-N
/// on the asymptotic window for some N <= n_max.
Verdict gs_moderate_verdict(const FunctionNet& u, const CompactBox& K, int alpha_max,
                            const EpsGrid& grid, const GsConfig& cfg = {});

/// Negligibility sweep at alpha = 0 only; a prior Supported moderateness
/// verdict is required (the derivative tests are redundant then).
Verdict gs_negligible_verdict(const FunctionNet& u, const CompactBox& K, int m_max,
                              const EpsGrid& grid, const Verdict& moderate);

/// Exact composition eps -> u_eps(x_eps); requires the compact support
/// certificate, otherwise moderateness of the value is not guaranteed.
GenNumberGs gs_point_eval(const FunctionNet& u, const GenPointGs& x);

/// Argmax-based witness construction: x(eps_i) maximizes |u_eps| over the
/// K-grid; returns the point net when the values clear eps^m0 on at least
/// half of the asymptotic window.
std::optional<GenPointGs> gs_witness_search(const FunctionNet& u, const CompactBox& K, int m0,
                                            const EpsGrid& grid);

struct ConstantCheckGs {
  Verdict derivatives;  // every first-derivative net negligible on K
  Verdict spread;       // eps -> max_{x,y in K-grid} |u_eps(x) - u_eps(y)| negligible
};

/// Both halves of the "constants are generalized numbers" equivalence,
/// reported independently. Requires a connected domain.
ConstantCheckGs gs_constant_check(const FunctionNet& u, const EpsGrid& grid, const CompactBox& K,
                                  const GsConfig& cfg = {});

}  // namespace colombeau
