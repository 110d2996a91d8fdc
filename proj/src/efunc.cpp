#include "colombeau/efunc.hpp"

#include "colombeau/errors.hpp"

namespace colombeau {

EFunc::EFunc(Domain omega, int deriv_order, Rule rule)
    : omega_(std::move(omega)), deriv_order_(deriv_order), rule_(std::move(rule)) {
  if (deriv_order_ < 0) throw PreconditionError("EFunc: negative derivative order");
}

bool EFunc::guard_ok(const TestFunction& phi, const Vec& x) const {
  // supp phi + x is a ball around center(phi) + x
  return omega_.contains_closed_ball(phi.center() + x, phi.support_radius());
}

Cplx EFunc::operator()(const TestFunction& phi, const Vec& x) const {
  return rule_(phi, x, MultiIndex(static_cast<size_t>(dim()), 0));
}

Cplx EFunc::deriv(const TestFunction& phi, const Vec& x, const MultiIndex& alpha) const {
  if (order_of(alpha) > deriv_order_) throw PreconditionError("EFunc: derivative order exhausted");
  return rule_(phi, x, alpha);
}

EFunc embed(const DistributionSpec& u, const Domain& omega, int deriv_order, int nodes_per_axis) {
  if (u.dim() != omega.dim()) throw PreconditionError("embed: dimension mismatch");
  auto rule = [u, nodes_per_axis](const TestFunction& phi, const Vec& x, const MultiIndex& alpha) {
    double sign = (order_of(alpha) % 2 == 0) ? 1.0 : -1.0;
    return sign * pair(u, translate(phi, x), alpha, nullptr, nodes_per_axis);
  };
  // test functions have closed-form derivatives of any order, so the
  // declared depth is the only cap
  return EFunc(omega, deriv_order, rule);
}

EFunc ge_add(const EFunc& r, const EFunc& s) {
  auto rule = [r, s](const TestFunction& phi, const Vec& x, const MultiIndex& a) {
    return r.deriv(phi, x, a) + s.deriv(phi, x, a);
  };
  return EFunc(r.domain(), std::min(r.deriv_order(), s.deriv_order()), rule);
}

EFunc ge_mul(const EFunc& r, const EFunc& s) {
  auto rule = [r, s](const TestFunction& phi, const Vec& x, const MultiIndex& a) {
    Cplx sum(0.0, 0.0);
    for (const auto& b : sub_indices(a))
      sum += multi_binomial(a, b) * r.deriv(phi, x, b) * s.deriv(phi, x, minus(a, b));
    return sum;
  };
  return EFunc(r.domain(), std::min(r.deriv_order(), s.deriv_order()), rule);
}

EFunc ge_scalar(Cplx c, const EFunc& r) {
  auto rule = [c, r](const TestFunction& phi, const Vec& x, const MultiIndex& a) {
    return c * r.deriv(phi, x, a);
  };
  return EFunc(r.domain(), r.deriv_order(), rule);
}

EFunc ge_derive(const EFunc& r, int axis) {
  if (r.deriv_order() < 1) throw PreconditionError("ge_derive: derivative order exhausted");
  auto rule = [r, axis](const TestFunction& phi, const Vec& x, const MultiIndex& a) {
    MultiIndex b = a;
    ++b[static_cast<size_t>(axis)];
    return r.deriv(phi, x, b);
  };
  return EFunc(r.domain(), r.deriv_order() - 1, rule);
}

EFunc rho_embed(const GenNumberGe& r, const Domain& omega) {
  auto rule = [r](const TestFunction& phi, const Vec&, const MultiIndex& a) {
    return order_of(a) == 0 ? r(phi) : Cplx(0.0, 0.0);
  };
  return EFunc(omega, 1 << 20, rule);
}

EFunc invert_function(const EFunc& r) {
  auto rule = [r](const TestFunction& phi, const Vec& x, const MultiIndex& a) -> Cplx {
    Cplx v = r(phi, x);
    if (v == Cplx(0.0, 0.0)) return Cplx(0.0, 0.0);
    int o = order_of(a);
    if (o == 0) return Cplx(1.0, 0.0) / v;
    if (o == 1) {
      // d_i (1/R) = -R_i / R^2
      return -r.deriv(phi, x, a) / (v * v);
    }
    if (o == 2) {
      // split a into e_i + e_j
      MultiIndex ei(a.size(), 0), ej(a.size(), 0);
      int picked = 0;
      for (size_t k = 0; k < a.size(); ++k)
        for (int c = 0; c < a[k]; ++c) {
          if (picked == 0)
            ei[k] = 1;
          else
            ej[k] = 1;
          ++picked;
        }
      Cplx ri = r.deriv(phi, x, ei), rj = r.deriv(phi, x, ej), rij = r.deriv(phi, x, a);
      return (2.0 * ri * rj - v * rij) / (v * v * v);
    }
    throw PreconditionError("invert_function: derivatives above order 2 not available");
  };
  return EFunc(r.domain(), std::min(r.deriv_order(), 2), rule);
}

GenNumberGe ge_point_eval(const EFunc& r, const GenPointGe& x) {
  if (!r.domain().contains_closed_box(x.support_box()))
    throw PreconditionError("ge_point_eval: point support box not compact in the domain");
  auto rule = [r, x](const TestFunction& phi) -> Cplx {
    Vec p = x(phi);
    if (!r.guard_ok(phi, p)) return Cplx(0.0, 0.0);
    return r(phi, p);
  };
  return GenNumberGe(rule, "point_eval");
}

}  // namespace colombeau
