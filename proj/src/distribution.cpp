#include "colombeau/distribution.hpp"
#include <cmath>

#include "colombeau/errors.hpp"
#include "colombeau/quadrature.hpp"

namespace colombeau {

LocalField as_field(const TestFunction& phi) {
  LocalField f;
  f.dim = phi.dim();
  f.center = phi.center();
  f.radius = phi.support_radius();
  f.eval = [phi](const Vec& y, const MultiIndex& alpha) { return phi.deriv(y, alpha); };
  return f;
}

LocalField lin_comb(double a, const LocalField& f, double b, const LocalField& g) {
  if (f.dim != g.dim) throw PreconditionError("lin_comb: dimension mismatch");
  LocalField r;
  r.dim = f.dim;
  Box fb = Box::ball_bounds(f.center, f.radius);
  Box gb = Box::ball_bounds(g.center, g.radius);
  Box u{fb.lo.cwiseMin(gb.lo), fb.hi.cwiseMax(gb.hi)};
  r.center = u.center();
  r.radius = 0.5 * (u.hi - u.lo).norm();
  auto fe = f.eval;
  auto ge = g.eval;
  r.eval = [a, fe, b, ge](const Vec& y, const MultiIndex& alpha) {
    return a * fe(y, alpha) + b * ge(y, alpha);
  };
  return r;
}

DistributionSpec DistributionSpec::smooth(int n, std::function<Cplx(const Vec&, const MultiIndex&)> f,
                                          std::string name) {
  DistributionSpec d;
  d.kind_ = Kind::SmoothFunction;
  d.dim_ = n;
  d.smooth_ = std::move(f);
  d.name_ = std::move(name);
  return d;
}

DistributionSpec DistributionSpec::delta(int n, MultiIndex order) {
  DistributionSpec d;
  d.kind_ = Kind::DeltaDerivative;
  d.dim_ = n;
  if (order.empty()) order.assign(static_cast<size_t>(n), 0);
  if (static_cast<int>(order.size()) != n) throw PreconditionError("delta: order dimension mismatch");
  d.delta_order_ = std::move(order);
  d.name_ = "delta";
  if (order_of(d.delta_order_) > 0) d.name_ += "^(" + std::to_string(order_of(d.delta_order_)) + ")";
  return d;
}

DistributionSpec DistributionSpec::heaviside() {
  DistributionSpec d;
  d.kind_ = Kind::Heaviside;
  d.dim_ = 1;
  d.name_ = "heaviside";
  return d;
}

DistributionSpec DistributionSpec::locally_integrable(int n, std::function<Cplx(const Vec&)> f,
                                                      std::string name) {
  DistributionSpec d;
  d.kind_ = Kind::LocallyIntegrable;
  d.dim_ = n;
  d.loc_ = std::move(f);
  d.name_ = std::move(name);
  return d;
}

DistributionSpec DistributionSpec::polynomial(std::vector<double> coeffs) {
  return smooth(
      1,
      [coeffs](const Vec& y, const MultiIndex& a) {
        int k = a.empty() ? 0 : a[0];
        double v = 0.0;
        for (size_t j = static_cast<size_t>(k); j < coeffs.size(); ++j) {
          double factor = 1.0;
          for (int i = 0; i < k; ++i) factor *= static_cast<double>(j) - i;
          v += coeffs[j] * factor * std::pow(y[0], static_cast<double>(j) - k);
        }
        return Cplx(v, 0.0);
      },
      "polynomial");
}

DistributionSpec DistributionSpec::sine() {
  return smooth(
      1,
      [](const Vec& y, const MultiIndex& a) {
        switch ((a.empty() ? 0 : a[0]) % 4) {
          case 0: return Cplx(std::sin(y[0]), 0.0);
          case 1: return Cplx(std::cos(y[0]), 0.0);
          case 2: return Cplx(-std::sin(y[0]), 0.0);
          default: return Cplx(-std::cos(y[0]), 0.0);
        }
      },
      "sin");
}

DistributionSpec DistributionSpec::derivative(int axis) const {
  switch (kind_) {
    case Kind::Heaviside:
      return delta(1);
    case Kind::DeltaDerivative: {
      MultiIndex k = delta_order_;
      ++k[static_cast<size_t>(axis)];
      return delta(dim_, k);
    }
    case Kind::SmoothFunction: {
      auto f = smooth_;
      return smooth(
          dim_,
          [f, axis](const Vec& y, const MultiIndex& alpha) {
            MultiIndex a = alpha.empty() ? MultiIndex(static_cast<size_t>(y.size()), 0) : alpha;
            ++a[static_cast<size_t>(axis)];
            return f(y, a);
          },
          name_ + "'");
    }
    case Kind::LocallyIntegrable:
      throw PreconditionError("DistributionSpec: no derivative rule for LocallyIntegrable");
  }
  throw PreconditionError("DistributionSpec: unknown kind");
}

Cplx pair(const DistributionSpec& u, const LocalField& psi, const MultiIndex& pre,
          const Domain* omega, int nodes_per_axis) {
  const int n = psi.dim;
  if (u.dim() != n) throw PreconditionError("pair: dimension mismatch");
  if (omega && !omega->contains_closed_ball(psi.center, psi.radius))
    throw DomainError("pair: field support not contained in domain");

  MultiIndex base = pre.empty() ? MultiIndex(static_cast<size_t>(n), 0) : pre;

  switch (u.kind()) {
    case DistributionSpec::Kind::DeltaDerivative: {
      // <d^k delta, f> = (-1)^{|k|} (d^k f)(0)
      MultiIndex total = base;
      const MultiIndex& k = u.delta_order();
      for (size_t i = 0; i < total.size(); ++i) total[i] += k[i];
      double sign = (order_of(k) % 2 == 0) ? 1.0 : -1.0;
      return Cplx(sign * psi.eval(Vec::Zero(n), total), 0.0);
    }
    case DistributionSpec::Kind::Heaviside: {
      double lo = psi.center[0] - psi.radius;
      double hi = psi.center[0] + psi.radius;
      if (hi <= 0.0) return Cplx(0.0, 0.0);
      lo = std::max(lo, 0.0);
      auto f = [&](const Vec& y) { return psi.eval(y, base); };
      return Cplx(integrate(f, Box{vec1(lo), vec1(hi)}, nodes_per_axis), 0.0);
    }
    case DistributionSpec::Kind::SmoothFunction: {
      Box support = Box::ball_bounds(psi.center, psi.radius);
      MultiIndex zero(static_cast<size_t>(n), 0);
      auto f = [&](const Vec& y) { return u.smooth_eval(y, zero) * psi.eval(y, base); };
      return integrate_cplx(f, support, nodes_per_axis);
    }
    case DistributionSpec::Kind::LocallyIntegrable: {
      Box support = Box::ball_bounds(psi.center, psi.radius);
      auto f = [&](const Vec& y) { return u.loc_int_eval(y) * psi.eval(y, base); };
      return integrate_cplx(f, support, nodes_per_axis);
    }
  }
  throw PreconditionError("pair: unknown distribution kind");
}

Cplx pair(const DistributionSpec& u, const TestFunction& psi, const MultiIndex& pre,
          const Domain* omega, int nodes_per_axis) {
  return pair(u, as_field(psi), pre, omega, nodes_per_axis);
}

}  // namespace colombeau
