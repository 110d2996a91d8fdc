#pragma once

#include "colombeau/box.hpp"
#include "colombeau/distribution.hpp"
#include "colombeau/gen_number.hpp"
#include "colombeau/gen_point.hpp"
#include "colombeau/test_function.hpp"

#include <functional>

namespace colombeau {

/// Element of the full-algebra base space: a rule on (test function, point)
/// pairs, smooth in the point, with closed-form x-derivative evaluators up
/// to a declared depth. Evaluation is only meaningful on the guarded set
/// supp(phi) + x inside Omega; sweeps skip violating pairs, point
/// evaluation maps them to the definition's 0 branch.
class EFunc {
 public:
  using Rule = std::function<Cplx(const TestFunction&, const Vec&, const MultiIndex&)>;

  EFunc(Domain omega, int deriv_order, Rule rule);

  int dim() const { return omega_.dim(); }
  const Domain& domain() const { return omega_; }
  int deriv_order() const { return deriv_order_; }

  /// supp(phi) + x inside Omega.
  bool guard_ok(const TestFunction& phi, const Vec& x) const;

  Cplx operator()(const TestFunction& phi, const Vec& x) const;
  Cplx deriv(const TestFunction& phi, const Vec& x, const MultiIndex& alpha) const;

 private:
  Domain omega_;
  int deriv_order_;
  Rule rule_;
};

/// iota(u)(phi, x) = <u, T_x phi>, with D_i iota(u) = -<u, T_x d_i phi>.
EFunc embed(const DistributionSpec& u, const Domain& omega, int deriv_order = 2,
            int nodes_per_axis = 64);

EFunc ge_add(const EFunc& r, const EFunc& s);
EFunc ge_mul(const EFunc& r, const EFunc& s);
EFunc ge_scalar(Cplx c, const EFunc& r);
EFunc ge_derive(const EFunc& r, int axis);

/// Constant-in-x section of the generalized numbers; all derivatives are
/// exactly zero.
EFunc rho_embed(const GenNumberGe& r, const Domain& omega);

/// S(phi, x) = 1/R(phi, x) where R does not vanish, 0 elsewhere;
/// derivatives by the quotient rule up to order 2.
EFunc invert_function(const EFunc& r);

/// R(X)(phi) = R(phi, X(phi)) on the guarded set, 0 otherwise. The compact
/// support certificate of X is required.
GenNumberGe ge_point_eval(const EFunc& r, const GenPointGe& x);

}  // namespace colombeau
