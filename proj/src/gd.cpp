#include "colombeau/gd.hpp"

#include "colombeau/errors.hpp"

#include <algorithm>
#include <cmath>

namespace colombeau {

TestObjectNet::TestObjectNet(Rule rule, int declared_q, std::string name)
    : rule_(std::move(rule)), declared_q_(declared_q), name_(std::move(name)) {
  if (declared_q_ < 0) throw PreconditionError("TestObjectNet: negative q");
}

TestObjectNet TestObjectNet::constant(const TestFunction& phi, std::string name) {
  int q = phi.generator().certified_order();
  return TestObjectNet([phi](double, const Vec&) { return phi; }, q, std::move(name));
}

TestObjectNet::BoundednessCert TestObjectNet::check_bounded(const EpsGrid& grid,
                                                            const CompactBox& K) const {
  BoundednessCert cert;
  cert.min_certified_order = 1 << 20;
  for (size_t gi = 0; gi < grid.size(); gi += 4) {
    for (size_t ki = 0; ki < K.grid().size(); ki += std::max<size_t>(1, K.grid().size() / 9)) {
      TestFunction phi = at(grid[gi], K.grid()[ki]);
      cert.max_radius = std::max(cert.max_radius, phi.support_radius());
      cert.max_sup = std::max(cert.max_sup, std::abs(phi(phi.center())));
      cert.min_certified_order = std::min(cert.min_certified_order,
                                          phi.generator().certified_order());
    }
  }
  cert.ok = cert.min_certified_order >= declared_q_ && std::isfinite(cert.max_radius) &&
            std::isfinite(cert.max_sup);
  if (!cert.ok) cert.note = "sampled values fall outside the declared class";
  return cert;
}

JFunc::JFunc(Domain omega, int deriv_order, Rule rule)
    : omega_(std::move(omega)), deriv_order_(deriv_order), rule_(std::move(rule)) {}

bool JFunc::guard_ok(const TestFunction& phi) const {
  return omega_.contains_closed_ball(phi.center(), phi.support_radius());
}

Cplx JFunc::operator()(const TestFunction& phi, const Vec& x) const {
  return rule_(phi, x, MultiIndex(static_cast<size_t>(dim()), 0));
}

Cplx JFunc::deriv(const TestFunction& phi, const Vec& x, const MultiIndex& alpha) const {
  if (order_of(alpha) > deriv_order_) throw PreconditionError("JFunc: derivative order exhausted");
  return rule_(phi, x, alpha);
}

JFunc to_jfunc(const EFunc& r) {
  auto rule = [r](const TestFunction& phi, const Vec& x, const MultiIndex& a) {
    return r.deriv(translate(phi, -x), x, a);
  };
  return JFunc(r.domain(), r.deriv_order(), rule);
}

EFunc to_efunc(const JFunc& j) {
  auto rule = [j](const TestFunction& phi, const Vec& x, const MultiIndex& a) {
    return j.deriv(translate(phi, x), x, a);
  };
  return EFunc(j.domain(), j.deriv_order(), rule);
}

Vec GdPoint::operator()(const TestFunction& phi, const Vec& x) const {
  Vec v = rule(phi, x);
  if (!range_box.contains_closed(v))
    throw DomainError("GdPoint: value escaped the compact range certificate");
  return v;
}

GdPoint GdPoint::constant(const Vec& x0, Box range) {
  GdPoint p;
  p.rule = [x0](const TestFunction&, const Vec&) { return x0; };
  p.range_box = std::move(range);
  if (!p.range_box.contains_closed(x0))
    throw PreconditionError("GdPoint: constant outside the range box");
  return p;
}

GdPoint GdPoint::from_ge(const GenPointGe& x) {
  GdPoint p;
  p.rule = [x](const TestFunction& phi, const Vec&) { return x(phi); };
  p.range_box = x.support_box();
  return p;
}

GdPoint to_jpoint(const GdPoint& x) {
  GdPoint p;
  auto r = x.rule;
  p.rule = [r](const TestFunction& phi, const Vec& y) { return r(translate(phi, -y), y); };
  p.range_box = x.range_box;
  return p;
}

GdPointValue::GdPointValue(Rule rule) : rule_(std::move(rule)), counters_(std::make_shared<Counters>()) {}

GdPointValue::Result GdPointValue::operator()(const TestFunction& phi, const Vec& x) const {
  Result r = rule_(phi, x);
  if (r.defined)
    ++counters_->evaluated;
  else
    ++counters_->skipped;
  return r;
}

GdPointValue gd_point_eval_C(const EFunc& r, const GdPoint& x) {
  auto rule = [r, x](const TestFunction& phi, const Vec& at) -> GdPointValue::Result {
    Vec p = x(phi, at);
    if (!r.guard_ok(phi, p)) return {};
    return {true, r(phi, p)};
  };
  return GdPointValue(rule);
}

GdPointValue gd_point_eval_J(const JFunc& r, const GdPoint& x) {
  auto rule = [r, x](const TestFunction& phi, const Vec& at) -> GdPointValue::Result {
    Vec p = x(phi, at);
    TestFunction shifted = translate(phi, p - at);
    if (!r.guard_ok(shifted)) return {};
    return {true, r(shifted, p)};
  };
  return GdPointValue(rule);
}

GdPointValue pullback_to_c(const GdPointValue& v) {
  auto rule = [v](const TestFunction& phi, const Vec& x) { return v(translate(phi, x), x); };
  return GdPointValue(rule);
}

Verdict gd_guard_sweep(const GdPointValue& v,
                       const std::vector<std::pair<TestFunction, Vec>>& pairs) {
  if (pairs.empty()) throw PreconditionError("gd_guard_sweep: no pairs");
  std::int64_t skipped = 0;
  for (const auto& [phi, x] : pairs)
    if (!v(phi, x).defined) ++skipped;
  if (2 * skipped > static_cast<std::int64_t>(pairs.size())) {
    Verdict w = Verdict::inconclusive("evaluation regime too coarse: guard violation rate above 50%");
    w.skipped_guard_pairs = skipped;
    return w;
  }
  Verdict ok = Verdict::supported_up_to(0);
  ok.skipped_guard_pairs = skipped;
  ok.reason = "guard violation rate within bounds";
  return ok;
}

namespace {

double window_cutoff(const EpsGrid& grid) { return grid[grid.asymptotic_start() - 1]; }

std::vector<Sample> net_sup_sweep(const EFunc& r, const CompactBox& K, const TestObjectNet& net,
                                  const EpsGrid& grid, const MultiIndex& alpha,
                                  std::int64_t* skipped, std::vector<Vec>* argmax = nullptr) {
  std::vector<Sample> samples;
  samples.reserve(grid.size());
  for (double eps : grid.values()) {
    double worst = 0.0;
    Vec arg = K.grid().front();
    bool any = false;
    for (const Vec& x : K.grid()) {
      TestFunction phi = scale(net.at(eps, x), eps);
      if (!r.guard_ok(phi, x)) {
        if (skipped) ++*skipped;
        continue;
      }
      any = true;
      double v = std::abs(r.deriv(phi, x, alpha));
      if (v >= worst) {
        worst = v;
        arg = x;
      }
    }
    samples.push_back({eps, any ? worst : 0.0});
    if (argmax) argmax->push_back(arg);
  }
  return samples;
}

std::vector<size_t> by_declared_q(const std::vector<TestObjectNet>& nets) {
  std::vector<size_t> order(nets.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return nets[a].declared_q() < nets[b].declared_q();
  });
  return order;
}

}  // namespace

Verdict gd_moderate_verdict(const EFunc& r, const CompactBox& K, int alpha_max,
                            const std::vector<TestObjectNet>& nets, const EpsGrid& grid,
                            int n_cap) {
  if (nets.empty()) throw PreconditionError("gd_moderate_verdict: no nets registered");
  if (!r.domain().contains_closed_box(K.box()))
    throw DomainError("gd_moderate_verdict: K not contained in the domain");
  const double cutoff = window_cutoff(grid);
  auto order = by_declared_q(nets);

  Verdict v = Verdict::supported_up_to(0);
  for (const auto& alpha : multi_indices_up_to(r.dim(), alpha_max)) {
    int found = -1;
    std::vector<Sample> last;
    std::vector<Vec> last_arg;
    int last_q = 0;
    for (size_t oi : order) {
      const auto& net = nets[oi];
      int n = net.declared_q();
      if (n > n_cap) break;
      last_arg.clear();
      last = net_sup_sweep(r, K, net, grid, alpha, &v.skipped_guard_pairs, &last_arg);
      last_q = n;
      if (landau_check(last, -static_cast<double>(n), cutoff)) {
        found = n;
        break;
      }
    }
    if (found < 0) {
      Witness w;
      for (size_t i = grid.asymptotic_start(); i < grid.size(); ++i)
        if (!(last[i].magnitude <= std::pow(last[i].eps, -last_q))) {
          w.eps = last[i].eps;
          w.x = last_arg[i];
          w.magnitude = last[i].magnitude;
          w.exponent = -last_q;
          w.bound = std::pow(last[i].eps, -last_q);
          break;
        }
      w.alpha = alpha;
      w.q = last_q;
      Verdict ref = Verdict::refuted(w);
      ref.reason = "no registered net certifies an eps^-N bound";
      ref.skipped_guard_pairs = v.skipped_guard_pairs;
      return ref;
    }
    v.max_order = std::max(v.max_order, found);
    try {
      v.estimates.push_back(fit_order(last));
    } catch (const Error&) {
    }
  }
  return v;
}

Verdict gd_negligible_verdict(const EFunc& r, const CompactBox& K, int m_max,
                              const std::vector<TestObjectNet>& nets, const EpsGrid& grid) {
  if (nets.empty()) throw PreconditionError("gd_negligible_verdict: no nets registered");
  if (!r.domain().contains_closed_box(K.box()))
    throw DomainError("gd_negligible_verdict: K not contained in the domain");
  const double cutoff = window_cutoff(grid);
  const MultiIndex zero(static_cast<size_t>(r.dim()), 0);
  auto order = by_declared_q(nets);

  Verdict v = Verdict::supported_up_to(m_max);
  for (int m = 1; m <= m_max; ++m) {
    int found = -1;
    std::vector<Sample> last;
    std::vector<Vec> last_arg;
    int last_q = 0;
    for (size_t oi : order) {
      const auto& net = nets[oi];
      last_arg.clear();
      last = net_sup_sweep(r, K, net, grid, zero, &v.skipped_guard_pairs, &last_arg);
      last_q = net.declared_q();
      if (landau_check(last, static_cast<double>(m), cutoff)) {
        found = net.declared_q();
        break;
      }
    }
    if (found < 0) {
      Witness w;
      for (size_t i = grid.asymptotic_start(); i < grid.size(); ++i)
        if (!(last[i].magnitude <= std::pow(last[i].eps, m))) {
          w.eps = last[i].eps;
          w.x = last_arg[i];
          w.magnitude = last[i].magnitude;
          w.exponent = m;
          w.bound = std::pow(last[i].eps, m);
          break;
        }
      w.q = last_q;
      Verdict ref = Verdict::refuted(w);
      ref.max_order = m - 1;
      ref.order_certificates = v.order_certificates;
      ref.reason = "negligibility fails at m=" + std::to_string(m) + " for every registered net";
      ref.skipped_guard_pairs = v.skipped_guard_pairs;
      return ref;
    }
    v.order_certificates.emplace_back(m, found);
  }
  return v;
}

bool constancy_check(const GdPoint& x,
                     const std::vector<std::tuple<TestFunction, Vec, Vec>>& samples,
                     Witness* witness) {
  for (const auto& [phi, a, b] : samples) {
    Vec va = x(phi, a);
    Vec vb = x(phi, b);
    if (va != vb) {
      if (witness) {
        witness->generator_id = phi.generator_id();
        witness->eps = phi.scale();
        witness->x = a;
        witness->magnitude = (va - vb).norm();
        witness->note = "X(phi, x) depends on the second slot";
      }
      return false;
    }
  }
  return true;
}

}  // namespace colombeau
