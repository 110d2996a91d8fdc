#include "colombeau/gen_number.hpp"

#include "colombeau/errors.hpp"

#include <cmath>

namespace colombeau {

Cplx eval(const NumExpr& e, const TestFunction& phi) {
  switch (e.op) {
    case NumExpr::Op::Const:
      return e.constant;
    case NumExpr::Op::ScaleOf:
      return Cplx(phi.scale(), 0.0);
    case NumExpr::Op::Add:
      return eval(*e.a, phi) + eval(*e.b, phi);
    case NumExpr::Op::Sub:
      return eval(*e.a, phi) - eval(*e.b, phi);
    case NumExpr::Op::Mul:
      return eval(*e.a, phi) * eval(*e.b, phi);
    case NumExpr::Op::PowInt: {
      Cplx v = eval(*e.a, phi);
      if (e.ipow == 0) return Cplx(1.0, 0.0);
      if (v == Cplx(0.0, 0.0)) return e.ipow > 0 ? Cplx(0.0, 0.0) : Cplx(0.0, 0.0);
      Cplx r(1.0, 0.0);
      int k = std::abs(e.ipow);
      for (int i = 0; i < k; ++i) r *= v;
      return e.ipow > 0 ? r : Cplx(1.0, 0.0) / r;
    }
    case NumExpr::Op::Invert: {
      Cplx v = eval(*e.a, phi);
      return v == Cplx(0.0, 0.0) ? Cplx(0.0, 0.0) : Cplx(1.0, 0.0) / v;
    }
    case NumExpr::Op::ZeroPartner: {
      Cplx v = eval(*e.a, phi);
      return v == Cplx(0.0, 0.0) ? Cplx(1.0, 0.0) : Cplx(0.0, 0.0);
    }
    case NumExpr::Op::GenIdMatch:
      return phi.generator_id() == e.gen_id ? eval(*e.a, phi) : eval(*e.b, phi);
    case NumExpr::Op::EvidenceTable: {
      if (phi.center().isZero(0.0)) {
        auto it = e.table.find({phi.generator_id(), phi.scale()});
        if (it != e.table.end()) return it->second;
      }
      return eval(*e.a, phi);
    }
  }
  throw Error("NumExpr: unknown op");
}

namespace {
NumExprPtr make(NumExpr e) { return std::make_shared<const NumExpr>(std::move(e)); }
}  // namespace

NumExprPtr num_const(Cplx c) {
  NumExpr e;
  e.op = NumExpr::Op::Const;
  e.constant = c;
  return make(std::move(e));
}

NumExprPtr num_scale_of() {
  NumExpr e;
  e.op = NumExpr::Op::ScaleOf;
  return make(std::move(e));
}

NumExprPtr num_add(NumExprPtr a, NumExprPtr b) {
  NumExpr e;
  e.op = NumExpr::Op::Add;
  e.a = std::move(a);
  e.b = std::move(b);
  return make(std::move(e));
}

NumExprPtr num_sub(NumExprPtr a, NumExprPtr b) {
  NumExpr e;
  e.op = NumExpr::Op::Sub;
  e.a = std::move(a);
  e.b = std::move(b);
  return make(std::move(e));
}

NumExprPtr num_mul(NumExprPtr a, NumExprPtr b) {
  NumExpr e;
  e.op = NumExpr::Op::Mul;
  e.a = std::move(a);
  e.b = std::move(b);
  return make(std::move(e));
}

NumExprPtr num_pow(NumExprPtr a, int k) {
  NumExpr e;
  e.op = NumExpr::Op::PowInt;
  e.a = std::move(a);
  e.ipow = k;
  return make(std::move(e));
}

NumExprPtr num_invert(NumExprPtr a) {
  NumExpr e;
  e.op = NumExpr::Op::Invert;
  e.a = std::move(a);
  return make(std::move(e));
}

NumExprPtr num_zero_partner(NumExprPtr a) {
  NumExpr e;
  e.op = NumExpr::Op::ZeroPartner;
  e.a = std::move(a);
  return make(std::move(e));
}

NumExprPtr num_gen_id_match(std::int64_t id, NumExprPtr then, NumExprPtr otherwise) {
  NumExpr e;
  e.op = NumExpr::Op::GenIdMatch;
  e.gen_id = id;
  e.a = std::move(then);
  e.b = std::move(otherwise);
  return make(std::move(e));
}

NumExprPtr num_evidence_table(std::map<std::pair<std::int64_t, double>, Cplx> table,
                              NumExprPtr otherwise) {
  NumExpr e;
  e.op = NumExpr::Op::EvidenceTable;
  e.table = std::move(table);
  e.a = std::move(otherwise);
  return make(std::move(e));
}

GenNumberGe::GenNumberGe(NumExprPtr tree) : tree_(std::move(tree)), label_("tree") {
  if (!tree_) throw PreconditionError("GenNumberGe: null tree");
}

GenNumberGe::GenNumberGe(std::function<Cplx(const TestFunction&)> rule, std::string label)
    : rule_(std::move(rule)), label_(std::move(label)) {}

Cplx GenNumberGe::operator()(const TestFunction& phi) const {
  return tree_ ? eval(*tree_, phi) : rule_(phi);
}

GenNumberGe operator+(const GenNumberGe& r, const GenNumberGe& s) {
  if (r.has_tree() && s.has_tree()) return GenNumberGe(num_add(r.tree(), s.tree()));
  return GenNumberGe([r, s](const TestFunction& phi) { return r(phi) + s(phi); },
                     r.label() + "+" + s.label());
}

GenNumberGe operator-(const GenNumberGe& r, const GenNumberGe& s) {
  if (r.has_tree() && s.has_tree()) return GenNumberGe(num_sub(r.tree(), s.tree()));
  return GenNumberGe([r, s](const TestFunction& phi) { return r(phi) - s(phi); },
                     r.label() + "-" + s.label());
}

GenNumberGe operator*(const GenNumberGe& r, const GenNumberGe& s) {
  if (r.has_tree() && s.has_tree()) return GenNumberGe(num_mul(r.tree(), s.tree()));
  return GenNumberGe([r, s](const TestFunction& phi) { return r(phi) * s(phi); },
                     r.label() + "*" + s.label());
}

GenNumberGe operator*(Cplx c, const GenNumberGe& r) { return GenNumberGe::constant(c) * r; }

GenNumberGe invert_number(const GenNumberGe& r) {
  if (r.has_tree()) return GenNumberGe(num_invert(r.tree()));
  return GenNumberGe(
      [r](const TestFunction& phi) {
        Cplx v = r(phi);
        return v == Cplx(0.0, 0.0) ? Cplx(0.0, 0.0) : Cplx(1.0, 0.0) / v;
      },
      "invert(" + r.label() + ")");
}

GenNumberGe zero_divisor_partner(const GenNumberGe& r) {
  if (r.has_tree()) return GenNumberGe(num_zero_partner(r.tree()));
  return GenNumberGe(
      [r](const TestFunction& phi) {
        return r(phi) == Cplx(0.0, 0.0) ? Cplx(1.0, 0.0) : Cplx(0.0, 0.0);
      },
      "partner(" + r.label() + ")");
}

namespace {

std::vector<Sample> number_samples(const GenNumberGe& r, const TestBattery& battery, int q) {
  std::vector<Sample> s;
  const EpsGrid& grid = battery.grid();
  s.reserve(grid.size());
  for (double eps : grid.values()) s.push_back({eps, std::abs(r(scale(battery.phi(q), eps)))});
  return s;
}

double window_cutoff(const EpsGrid& grid) { return grid[grid.asymptotic_start() - 1]; }

Witness number_witness(const std::vector<Sample>& samples, const EpsGrid& grid,
                       const TestBattery& battery, int q, int exponent, bool want_below) {
  // want_below: violation means magnitude < bound (strict nonzero tests);
  // otherwise violation means magnitude > bound (negligibility tests)
  for (size_t i = grid.asymptotic_start(); i < grid.size(); ++i) {
    double bound = std::pow(samples[i].eps, exponent);
    bool bad = want_below ? !(samples[i].magnitude >= bound) : !(samples[i].magnitude <= bound);
    if (bad) {
      Witness w;
      w.generator_id = battery.phi(q).generator_id();
      w.q = q;
      w.eps = samples[i].eps;
      w.magnitude = samples[i].magnitude;
      w.exponent = exponent;
      w.bound = bound;
      return w;
    }
  }
  throw Error("number_witness: no violation found");
}

}  // namespace

Verdict strictly_nonzero_verdict(const GenNumberGe& r, const TestBattery& battery) {
  const EpsGrid& grid = battery.grid();
  for (int q = 1; q <= battery.q_max(); ++q) {
    auto s = number_samples(r, battery, q);
    bool ok = true;
    for (size_t i = grid.asymptotic_start(); i < grid.size() && ok; ++i)
      if (!(s[i].magnitude >= std::pow(s[i].eps, q))) ok = false;
    if (ok) {
      Verdict v = Verdict::supported_up_to(q, battery.id());
      v.cert_q = q;
      return v;
    }
  }
  // refuted: report the failing sequence for every q
  Verdict v;
  v.kind = VerdictKind::RefutedWithWitness;
  v.battery_id = battery.id();
  for (int q = 1; q <= battery.q_max(); ++q) {
    auto s = number_samples(r, battery, q);
    v.witnesses.push_back(number_witness(s, grid, battery, q, q, /*want_below=*/true));
  }
  v.reason = "no q <= q_max with |r(S_eps phi_q)| >= eps^q on the window";
  return v;
}

Verdict num_moderate_verdict(const GenNumberGe& r, const TestBattery& battery,
                             const NumConfig& cfg) {
  const EpsGrid& grid = battery.grid();
  const double cutoff = window_cutoff(grid);
  const int n_cap = std::min(cfg.n_max, battery.q_max());
  for (int n = 0; n <= n_cap; ++n) {
    auto s = number_samples(r, battery, n);
    if (landau_check(s, -static_cast<double>(n), cutoff)) {
      Verdict v = Verdict::supported_up_to(n, battery.id());
      v.cert_q = n;
      try {
        v.estimates.push_back(fit_order(s));
      } catch (const Error&) {
      }
      return v;
    }
  }
  auto s = number_samples(r, battery, n_cap);
  Verdict v = Verdict::refuted(number_witness(s, grid, battery, n_cap, -n_cap, false), battery.id());
  v.reason = "no N <= " + std::to_string(n_cap) + " with eps^-N bound for phi_N";
  return v;
}

Verdict num_negligible_verdict(const GenNumberGe& r, const TestBattery& battery,
                               const NumConfig& cfg) {
  const EpsGrid& grid = battery.grid();
  const double cutoff = window_cutoff(grid);
  Verdict v = Verdict::supported_up_to(cfg.m_max, battery.id());
  for (int m = 1; m <= cfg.m_max; ++m) {
    int found = -1;
    for (int q = 0; q <= battery.q_max() && found < 0; ++q) {
      auto s = number_samples(r, battery, q);
      if (landau_check(s, static_cast<double>(m), cutoff)) found = q;
    }
    if (found < 0) {
      Verdict ref;
      ref.kind = VerdictKind::RefutedWithWitness;
      ref.battery_id = battery.id();
      ref.max_order = m - 1;
      ref.order_certificates = v.order_certificates;
      for (int q = 0; q <= battery.q_max(); ++q) {
        auto s = number_samples(r, battery, q);
        ref.witnesses.push_back(number_witness(s, grid, battery, q, m, /*want_below=*/false));
      }
      ref.reason = "negligibility fails at m=" + std::to_string(m) + " for every battery q";
      return ref;
    }
    v.order_certificates.emplace_back(m, found);
    v.cert_q = std::max(v.cert_q, found);
  }
  return v;
}

Verdict leq_verdict(const GenNumberGe& r, const GenNumberGe& s, const TestBattery& battery,
                    const NumConfig& cfg) {
  const EpsGrid& grid = battery.grid();
  auto real_of = [](Cplx v, const char* who) {
    if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real())))
      throw PreconditionError(std::string("leq_verdict: ") + who + " is not real-valued");
    return v.real();
  };

  bool pointwise = true;
  Witness first_bad;
  for (int q = 0; q <= battery.q_max() && pointwise; ++q)
    for (size_t i = 0; i < grid.size(); ++i) {
      TestFunction phi = scale(battery.phi(q), grid[i]);
      double rv = real_of(r(phi), "r"), sv = real_of(s(phi), "s");
      if (!(rv <= sv)) {
        pointwise = false;
        first_bad.generator_id = phi.generator_id();
        first_bad.q = q;
        first_bad.eps = grid[i];
        first_bad.magnitude = rv - sv;
        first_bad.note = "r - s > 0";
        break;
      }
    }
  if (pointwise) {
    Verdict v = Verdict::supported_up_to(0, battery.id());
    v.reason = "pointwise on battery (representative-level)";
    return v;
  }

  // negligible-slack fallback on max(r - s, 0)
  GenNumberGe slack(
      [r, s, real_of](const TestFunction& phi) {
        double d = real_of(r(phi), "r") - real_of(s(phi), "s");
        return Cplx(std::max(d, 0.0), 0.0);
      },
      "max(r-s,0)");
  Verdict neg = num_negligible_verdict(slack, battery, cfg);
  if (neg.supported()) {
    Verdict v = Verdict::supported_up_to(neg.max_order, battery.id());
    v.order_certificates = neg.order_certificates;
    v.reason = "holds up to negligible slack";
    return v;
  }
  Verdict v = Verdict::refuted(first_bad, battery.id());
  v.reason = "r > s by non-negligible margin";
  v.witnesses.insert(v.witnesses.end(), neg.witnesses.begin(), neg.witnesses.end());
  return v;
}

}  // namespace colombeau
