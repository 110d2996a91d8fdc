#include "colombeau/gs.hpp"

#include "colombeau/errors.hpp"

#include <cmath>

namespace colombeau {

FunctionNet::FunctionNet(Domain domain, int deriv_order, Rule rule)
    : domain_(std::move(domain)), deriv_order_(deriv_order), rule_(std::move(rule)) {
  if (deriv_order_ < 0) throw PreconditionError("FunctionNet: negative derivative order");
}

Cplx FunctionNet::operator()(double eps, const Vec& y) const {
  return rule_(eps, y, MultiIndex(static_cast<size_t>(dim()), 0));
}

Cplx FunctionNet::deriv(double eps, const Vec& y, const MultiIndex& alpha) const {
  if (order_of(alpha) > deriv_order_)
    throw PreconditionError("FunctionNet: derivative order exhausted");
  return rule_(eps, y, alpha);
}

FunctionNet FunctionNet::derive(int axis) const {
  if (deriv_order_ < 1) throw PreconditionError("FunctionNet: derivative order exhausted");
  auto r = rule_;
  return FunctionNet(domain_, deriv_order_ - 1, [r, axis](double eps, const Vec& y, const MultiIndex& a) {
    MultiIndex b = a;
    ++b[static_cast<size_t>(axis)];
    return r(eps, y, b);
  });
}

FunctionNet operator+(const FunctionNet& u, const FunctionNet& v) {
  auto ru = u.rule_, rv = v.rule_;
  return FunctionNet(u.domain_, std::min(u.deriv_order_, v.deriv_order_),
                     [ru, rv](double eps, const Vec& y, const MultiIndex& a) {
                       return ru(eps, y, a) + rv(eps, y, a);
                     });
}

FunctionNet operator*(const FunctionNet& u, const FunctionNet& v) {
  auto ru = u.rule_, rv = v.rule_;
  return FunctionNet(u.domain_, std::min(u.deriv_order_, v.deriv_order_),
                     [ru, rv](double eps, const Vec& y, const MultiIndex& a) {
                       Cplx s(0.0, 0.0);
                       for (const auto& b : sub_indices(a))
                         s += multi_binomial(a, b) * ru(eps, y, b) * rv(eps, y, minus(a, b));
                       return s;
                     });
}

FunctionNet operator*(Cplx c, const FunctionNet& u) {
  auto r = u.rule_;
  return FunctionNet(u.domain_, u.deriv_order_,
                     [c, r](double eps, const Vec& y, const MultiIndex& a) { return c * r(eps, y, a); });
}

namespace {

void require_k_in_domain(const Domain& omega, const CompactBox& K) {
  if (!omega.contains_closed_box(K.box()))
    throw DomainError("verdict sweep: compact set not contained in the domain");
}

std::vector<Sample> sup_samples(const FunctionNet& u, const CompactBox& K, const EpsGrid& grid,
                                const MultiIndex& alpha) {
  std::vector<Sample> s;
  s.reserve(grid.size());
  for (double eps : grid.values()) {
    double m = 0.0;
    for (const Vec& x : K.grid()) m = std::max(m, std::abs(u.deriv(eps, x, alpha)));
    s.push_back({eps, m});
  }
  return s;
}

double window_cutoff(const EpsGrid& grid) { return grid[grid.asymptotic_start() - 1]; }

/// Largest grid point and argmax at the first eps in the asymptotic
/// window violating mag <= eps^p.
Witness violation_witness(const FunctionNet& u, const CompactBox& K, const EpsGrid& grid,
                          const MultiIndex& alpha, double p) {
  for (size_t i = grid.asymptotic_start(); i < grid.size(); ++i) {
    double eps = grid[i];
    double worst = 0.0;
    Vec arg = K.grid().front();
    for (const Vec& x : K.grid()) {
      double v = std::abs(u.deriv(eps, x, alpha));
      if (v > worst) {
        worst = v;
        arg = x;
      }
    }
    if (!(worst <= std::pow(eps, p))) {
      Witness w;
      w.eps = eps;
      w.x = arg;
      w.alpha = alpha;
      w.magnitude = worst;
      w.exponent = static_cast<int>(p);
      w.bound = std::pow(eps, p);
      return w;
    }
  }
  throw Error("violation_witness: no violation found");
}

}  // namespace

Verdict gs_moderate_verdict(const FunctionNet& u, const CompactBox& K, int alpha_max,
                            const EpsGrid& grid, const GsConfig& cfg) {
  if (alpha_max > u.deriv_order())
    throw PreconditionError("gs_moderate_verdict: alpha_max above configured derivative order");
  require_k_in_domain(u.domain(), K);

  const double cutoff = window_cutoff(grid);
  Verdict v = Verdict::supported_up_to(0);
  for (const auto& alpha : multi_indices_up_to(u.dim(), alpha_max)) {
    auto samples = sup_samples(u, K, grid, alpha);
    if (!landau_check(samples, -static_cast<double>(cfg.n_max), cutoff)) {
      Verdict r = Verdict::refuted(violation_witness(u, K, grid, alpha, -cfg.n_max));
      r.reason = "no eps^-N bound with N <= " + std::to_string(cfg.n_max);
      return r;
    }
    // smallest N <= n_max certifying this derivative
    int need = cfg.n_max;
    for (int n = 0; n <= cfg.n_max; ++n)
      if (landau_check(samples, -static_cast<double>(n), cutoff)) {
        need = n;
        break;
      }
    v.max_order = std::max(v.max_order, need);
    try {
      v.estimates.push_back(fit_order(samples));
    } catch (const Error&) {
      // identically zero or too sparse on the window: nothing to estimate
    }
  }
  return v;
}

Verdict gs_negligible_verdict(const FunctionNet& u, const CompactBox& K, int m_max,
                              const EpsGrid& grid, const Verdict& moderate) {
  if (!moderate.supported())
    throw PreconditionError("gs_negligible_verdict: moderateness must be Supported first");
  require_k_in_domain(u.domain(), K);

  const double cutoff = window_cutoff(grid);
  MultiIndex zero(static_cast<size_t>(u.dim()), 0);
  auto samples = sup_samples(u, K, grid, zero);
  Verdict v = Verdict::supported_up_to(m_max);
  try {
    v.estimates.push_back(fit_order(samples));
  } catch (const Error&) {
  }
  for (int m = 1; m <= m_max; ++m) {
    if (!landau_check(samples, static_cast<double>(m), cutoff)) {
      Verdict r = Verdict::refuted(violation_witness(u, K, grid, zero, m));
      r.max_order = m - 1;  // largest passing order, for the report
      r.estimates = v.estimates;
      return r;
    }
  }
  return v;
}

GenNumberGs gs_point_eval(const FunctionNet& u, const GenPointGs& x) {
  if (!x.compactly_supported())
    throw PreconditionError("gs_point_eval: point carries no compact support certificate");
  auto ur = [&u](double eps, const Vec& y) { return u(eps, y); };
  auto xr = x.rule;
  return GenNumberGs{[ur, xr](double eps) { return ur(eps, xr(eps)); }};
}

std::optional<GenPointGs> gs_witness_search(const FunctionNet& u, const CompactBox& K, int m0,
                                            const EpsGrid& grid) {
  std::vector<Vec> argmax;
  std::vector<double> value;
  argmax.reserve(grid.size());
  for (double eps : grid.values()) {
    double worst = -1.0;
    Vec arg = K.grid().front();
    for (const Vec& x : K.grid()) {
      double v = std::abs(u(eps, x));
      if (v > worst) {
        worst = v;
        arg = x;
      }
    }
    argmax.push_back(arg);
    value.push_back(worst);
  }

  size_t hits = 0;
  const size_t w0 = grid.asymptotic_start();
  for (size_t i = w0; i < grid.size(); ++i)
    if (value[i] >= std::pow(grid[i], m0)) ++hits;
  if (2 * hits < grid.size() - w0) return std::nullopt;

  // step rule in eps: nearest grid index on the log scale
  const double base = grid.base();
  const int start = grid.start_exp(), end = grid.end_exp();
  auto rule = [argmax, base, start, end](double eps) {
    double k = std::log(eps) / std::log(base);
    int i = static_cast<int>(std::lround(k));
    i = std::max(start, std::min(end, i));
    return argmax[static_cast<size_t>(i - start)];
  };
  GenPointGs p;
  p.rule = rule;
  p.support_box = K.box();
  p.eta = 1.0;
  return p;
}

ConstantCheckGs gs_constant_check(const FunctionNet& u, const EpsGrid& grid, const CompactBox& K,
                                  const GsConfig& cfg) {
  if (!u.domain().connected())
    throw PreconditionError("gs_constant_check: domain must be connected");

  ConstantCheckGs out;
  out.derivatives = Verdict::supported_up_to(cfg.m_max);
  for (int i = 0; i < u.dim(); ++i) {
    FunctionNet di = u.derive(i);
    Verdict mod = gs_moderate_verdict(di, K, 0, grid, cfg);
    if (!mod.supported()) {
      out.derivatives = mod;
      break;
    }
    Verdict neg = gs_negligible_verdict(di, K, cfg.m_max, grid, mod);
    if (!neg.supported()) {
      out.derivatives = neg;
      break;
    }
    out.derivatives.max_order = std::min(out.derivatives.max_order, neg.max_order);
  }

  // spread samples double as a negligibility sweep
  std::vector<Sample> spread;
  for (double eps : grid.values()) {
    double m = 0.0;
    for (const Vec& x : K.grid())
      for (const Vec& y : K.grid()) m = std::max(m, std::abs(u(eps, x) - u(eps, y)));
    spread.push_back({eps, m});
  }
  const double cutoff = grid[grid.asymptotic_start() - 1];
  out.spread = Verdict::supported_up_to(cfg.m_max);
  for (int m = 1; m <= cfg.m_max; ++m) {
    if (!landau_check(spread, static_cast<double>(m), cutoff)) {
      Witness w;
      w.exponent = m;
      for (size_t i = grid.asymptotic_start(); i < grid.size(); ++i)
        if (!(spread[i].magnitude <= std::pow(spread[i].eps, m))) {
          w.eps = spread[i].eps;
          w.magnitude = spread[i].magnitude;
          w.bound = std::pow(spread[i].eps, m);
          break;
        }
      w.note = "spread over K-grid";
      out.spread = Verdict::refuted(w);
      out.spread.max_order = m - 1;
      break;
    }
  }
  return out;
}

}  // namespace colombeau
