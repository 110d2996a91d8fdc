#include "colombeau/ge.hpp"

#include "colombeau/errors.hpp"

#include <cmath>
#include <sstream>

namespace colombeau {

namespace {

double window_cutoff(const EpsGrid& grid) { return grid[grid.asymptotic_start() - 1]; }

struct SupSweep {
  std::vector<Sample> samples;
  std::vector<Vec> argmax;
  std::int64_t skipped = 0;
};

/// eps -> sup over the K-grid of |d^alpha R(S_eps phi_q, x)|, guarded pairs
/// only.
SupSweep sup_sweep(const EFunc& r, const CompactBox& K, const TestBattery& battery, int q,
                   const MultiIndex& alpha) {
  SupSweep out;
  const EpsGrid& grid = battery.grid();
  out.samples.reserve(grid.size());
  for (double eps : grid.values()) {
    TestFunction phi = scale(battery.phi(q), eps);
    double worst = 0.0;
    Vec arg = K.grid().front();
    bool any = false;
    for (const Vec& x : K.grid()) {
      if (!r.guard_ok(phi, x)) {
        ++out.skipped;
        continue;
      }
      any = true;
      double v = std::abs(r.deriv(phi, x, alpha));
      if (v >= worst) {
        worst = v;
        arg = x;
      }
    }
    out.samples.push_back({eps, any ? worst : 0.0});
    out.argmax.push_back(arg);
  }
  return out;
}

Witness sweep_witness(const SupSweep& sweep, const EpsGrid& grid, const TestBattery& battery, int q,
                      const MultiIndex& alpha, int exponent, bool want_below) {
  for (size_t i = grid.asymptotic_start(); i < grid.size(); ++i) {
    double bound = std::pow(sweep.samples[i].eps, exponent);
    double mag = sweep.samples[i].magnitude;
    bool bad = want_below ? !(mag >= bound) : !(mag <= bound);
    if (bad) {
      Witness w;
      w.generator_id = battery.phi(q).generator_id();
      w.q = q;
      w.eps = sweep.samples[i].eps;
      w.x = sweep.argmax[i];
      w.alpha = alpha;
      w.exponent = exponent;
      w.magnitude = mag;
      w.bound = bound;
      return w;
    }
  }
  throw Error("sweep_witness: no violation found");
}

}  // namespace

Verdict ge_moderate_verdict(const EFunc& r, const CompactBox& K, int alpha_max,
                            const TestBattery& battery, const GeConfig& cfg) {
  if (alpha_max > r.deriv_order())
    throw PreconditionError("ge_moderate_verdict: alpha_max above derivative depth");
  if (!r.domain().contains_closed_box(K.box()))
    throw DomainError("ge_moderate_verdict: K not compactly contained in the domain");

  const EpsGrid& grid = battery.grid();
  const double cutoff = window_cutoff(grid);
  const int n_cap = std::min(cfg.q_max, battery.q_max());

  Verdict v = Verdict::supported_up_to(0, battery.id());
  for (const auto& alpha : multi_indices_up_to(r.dim(), alpha_max)) {
    int found = -1;
    SupSweep last;
    for (int n = 0; n <= n_cap && found < 0; ++n) {
      last = sup_sweep(r, K, battery, n, alpha);
      v.skipped_guard_pairs += last.skipped;
      if (landau_check(last.samples, -static_cast<double>(n), cutoff)) found = n;
    }
    if (found < 0) {
      Verdict ref = Verdict::refuted(
          sweep_witness(last, grid, battery, n_cap, alpha, -n_cap, /*want_below=*/false),
          battery.id());
      ref.reason = "no N <= " + std::to_string(n_cap) + " bounds d^alpha R";
      ref.skipped_guard_pairs = v.skipped_guard_pairs;
      return ref;
    }
    v.max_order = std::max(v.max_order, found);
    try {
      v.estimates.push_back(fit_order(last.samples));
    } catch (const Error&) {
    }
  }
  return v;
}

Verdict ge_negligible_verdict(const EFunc& r, const CompactBox& K, int m_max,
                              const TestBattery& battery, const GeConfig& cfg) {
  if (!r.domain().contains_closed_box(K.box()))
    throw DomainError("ge_negligible_verdict: K not compactly contained in the domain");
  const EpsGrid& grid = battery.grid();
  const double cutoff = window_cutoff(grid);
  const MultiIndex zero(static_cast<size_t>(r.dim()), 0);
  const int q_cap = std::min(cfg.q_max, battery.q_max());

  Verdict v = Verdict::supported_up_to(m_max, battery.id());
  for (int m = 1; m <= m_max; ++m) {
    int found = -1;
    std::vector<SupSweep> sweeps;
    for (int q = 0; q <= q_cap && found < 0; ++q) {
      sweeps.push_back(sup_sweep(r, K, battery, q, zero));
      v.skipped_guard_pairs += sweeps.back().skipped;
      if (landau_check(sweeps.back().samples, static_cast<double>(m), cutoff)) found = q;
    }
    if (found < 0) {
      Verdict ref;
      ref.kind = VerdictKind::RefutedWithWitness;
      ref.battery_id = battery.id();
      ref.max_order = m - 1;
      ref.order_certificates = v.order_certificates;
      ref.skipped_guard_pairs = v.skipped_guard_pairs;
      for (int q = 0; q <= q_cap; ++q)
        ref.witnesses.push_back(
            sweep_witness(sweeps[static_cast<size_t>(q)], grid, battery, q, zero, m, false));
      ref.reason = "negligibility fails at m=" + std::to_string(m) + " for every battery q";
      try {
        ref.estimates.push_back(fit_order(sweeps.back().samples));
      } catch (const Error&) {
      }
      return ref;
    }
    v.order_certificates.emplace_back(m, found);
    v.cert_q = std::max(v.cert_q, found);
  }
  return v;
}

std::vector<int> Evidence::qualifying(int min_hits, int q_from) const {
  std::vector<int> qs;
  for (const auto& [q, h] : hits)
    if (q >= q_from && static_cast<int>(h.size()) >= min_hits) qs.push_back(q);
  return qs;
}

Evidence gather_evidence(const EFunc& r, const CompactBox& K, int m0, const TestBattery& battery,
                         const GeConfig& cfg) {
  Evidence ev;
  ev.m0 = m0;
  const EpsGrid& grid = battery.grid();
  const int q_cap = std::min(cfg.q_max, battery.q_max());
  for (int q = 0; q <= q_cap; ++q) {
    std::vector<EvidenceHit> hits;
    for (double eps : grid.values()) {
      TestFunction phi = scale(battery.phi(q), eps);
      double bound = std::pow(eps, m0);
      double best = 0.0;
      Vec arg;
      bool hit = false;
      for (const Vec& x : K.grid()) {
        if (!r.guard_ok(phi, x)) {
          ++ev.skipped_guard_pairs;
          continue;
        }
        double v = std::abs(r(phi, x));
        if (v >= bound && v >= best) {
          best = v;
          arg = x;
          hit = true;
        }
      }
      if (hit) hits.push_back({eps, arg, best});
    }
    if (!hits.empty()) ev.hits.emplace(q, std::move(hits));
  }
  return ev;
}

GenPointGe construct_point(const Evidence& evidence, const Vec& x0, const CompactBox& K,
                           const TestBattery& battery, const GeConfig& cfg) {
  auto qs = evidence.qualifying(cfg.min_evidence_hits);
  if (qs.size() < 2) {
    std::ostringstream os;
    os << "construct_point: evidence too thin; need >= 2 orders with >= " << cfg.min_evidence_hits
       << " hits, missing q:";
    for (int q = 1; q <= std::min(cfg.q_max, battery.q_max()); ++q) {
      auto it = evidence.hits.find(q);
      int n = it == evidence.hits.end() ? 0 : static_cast<int>(it->second.size());
      if (n < cfg.min_evidence_hits) os << " " << q << "(" << n << ")";
    }
    throw ConstructionError(os.str());
  }

  std::map<std::pair<std::int64_t, double>, Vec> table;
  for (int q : qs) {
    // exact certified order is the lemma's a_l; the factory guarantees
    // a_l = q_l, so every qualifying order joins the subsequence
    if (battery.phi(q).generator().certified_order() != q)
      throw ConstructionError("construct_point: battery certificate mismatch");
    std::int64_t id = battery.phi(q).generator_id();
    for (const auto& h : evidence.hits.at(q)) table[{id, h.eps}] = h.x;
  }
  return GenPointGe(std::move(table), x0, K.box());
}

CharacterizationResult characterization_pipeline(const EFunc& r, const CompactBox& K, int m0,
                                                 const TestBattery& battery, const GeConfig& cfg) {
  CharacterizationResult out;
  out.evidence = gather_evidence(r, K, m0, battery, cfg);
  auto qs = out.evidence.qualifying(cfg.min_evidence_hits);
  if (qs.size() < 2) {
    out.verdict = Verdict::supported_up_to(m0, battery.id());
    out.verdict.reason = "no evidence subsequences at m0=" + std::to_string(m0);
    out.verdict.skipped_guard_pairs = out.evidence.skipped_guard_pairs;
    return out;
  }

  Vec x0 = K.box().center();
  GenPointGe x = construct_point(out.evidence, x0, K, battery, cfg);
  GenNumberGe value = ge_point_eval(r, x);

  // confirm the Landau failure of R(X) along every recorded subsequence
  Verdict v;
  v.kind = VerdictKind::RefutedWithWitness;
  v.battery_id = battery.id();
  for (int q : qs) {
    for (const auto& h : out.evidence.hits.at(q)) {
      TestFunction phi = scale(battery.phi(q), h.eps);
      double mag = std::abs(value(phi));
      if (!(mag >= std::pow(h.eps, m0))) {
        out.verdict = Verdict::inconclusive(
            "point value failed to reproduce the evidence magnitude at q=" + std::to_string(q));
        return out;
      }
    }
    const auto& h0 = out.evidence.hits.at(q).front();
    Witness w;
    w.generator_id = battery.phi(q).generator_id();
    w.q = q;
    w.eps = h0.eps;
    w.x = h0.x;
    w.magnitude = h0.magnitude;
    w.exponent = m0;
    w.bound = std::pow(h0.eps, m0);
    w.note = "R(X) breaks eps^m0 along the q-subsequence";
    v.witnesses.push_back(w);
  }
  v.reason = "R(X) not negligible: evidence subsequences for q in battery";
  v.skipped_guard_pairs = out.evidence.skipped_guard_pairs;
  out.verdict = std::move(v);
  out.point = std::move(x);
  return out;
}

Verdict ge_invertible_verdict(const EFunc& r, const std::vector<CompactBox>& k_family,
                              const TestBattery& battery, const GeConfig& cfg) {
  if (k_family.empty()) throw PreconditionError("ge_invertible_verdict: empty K family");
  const EpsGrid& grid = battery.grid();
  const int q_cap = std::min(cfg.q_max, battery.q_max());
  const MultiIndex zero(static_cast<size_t>(r.dim()), 0);

  Verdict v = Verdict::supported_up_to(0, battery.id());
  for (const auto& K : k_family) {
    if (!r.domain().contains_closed_box(K.box()))
      throw DomainError("ge_invertible_verdict: K not compactly contained in the domain");
    int found = -1;
    SupSweep last;
    for (int q = 1; q <= q_cap && found < 0; ++q) {
      last = sup_sweep(r, K, battery, q, zero);
      v.skipped_guard_pairs += last.skipped;
      bool ok = true;
      for (size_t i = grid.asymptotic_start(); i < grid.size() && ok; ++i)
        if (!(last.samples[i].magnitude >= std::pow(last.samples[i].eps, q))) ok = false;
      if (ok) found = q;
    }
    if (found < 0) {
      Verdict ref = Verdict::refuted(
          sweep_witness(last, grid, battery, q_cap, zero, q_cap, /*want_below=*/true), battery.id());
      ref.reason = "sup_K |R(S_eps phi_q, x)| misses eps^q for every q (m=q search)";
      ref.skipped_guard_pairs = v.skipped_guard_pairs;
      return ref;
    }
    v.max_order = std::max(v.max_order, found);
    v.cert_q = std::max(v.cert_q, found);
  }
  return v;
}

ConstantCheckGe ge_constant_check(const EFunc& r, const CompactBox& k1, const CompactBox& k2,
                                  const GenPointGe& x, const TestBattery& battery,
                                  const GeConfig& cfg) {
  const Domain& omega = r.domain();
  if (!omega.connected()) throw DomainError("ge_constant_check: domain must be connected");
  if (!omega.contains_closed_box(k1.box()) || !omega.contains_closed_box(k2.box()))
    throw DomainError("ge_constant_check: compact sets not contained in the domain");

  ConstantCheckGe out;

  // constructive (M, L): polyline between the K centers through overlap
  // centers, plus the compact sets themselves
  Polyline line = omega.polyline_between(k1.box().center(), k2.box().center());
  out.tube = omega.tube_around(line);
  out.tube.push_back(k1.box());
  out.tube.push_back(k2.box());
  out.path_length_bound = k1.box().diameter() + line.length + k2.box().diameter();

  const EpsGrid& grid = battery.grid();
  const double cutoff = window_cutoff(grid);
  const int q_cap = std::min(cfg.q_max, battery.q_max());

  // derivative hypothesis: every D_i R negligible on the tube
  out.derivative_hypothesis = Verdict::supported_up_to(cfg.m_max, battery.id());
  for (int axis = 0; axis < r.dim() && out.derivative_hypothesis.supported(); ++axis) {
    EFunc di = ge_derive(r, axis);
    std::vector<CompactBox> tube_boxes;
    for (const auto& b : out.tube) tube_boxes.emplace_back(b, 17);
    for (int m = 1; m <= cfg.m_max; ++m) {
      int found = -1;
      for (int q = 0; q <= q_cap && found < 0; ++q) {
        bool ok = true;
        for (const auto& tb : tube_boxes) {
          auto sw = sup_sweep(di, tb, battery, q, MultiIndex(static_cast<size_t>(r.dim()), 0));
          out.derivative_hypothesis.skipped_guard_pairs += sw.skipped;
          if (!landau_check(sw.samples, static_cast<double>(m), cutoff)) {
            ok = false;
            break;
          }
        }
        if (ok) found = q;
      }
      if (found < 0) {
        auto sw = sup_sweep(di, tube_boxes.front(), battery, q_cap,
                            MultiIndex(static_cast<size_t>(r.dim()), 0));
        Verdict ref = Verdict::refuted(
            sweep_witness(sw, grid, battery, q_cap, MultiIndex(static_cast<size_t>(r.dim()), 0), m,
                          false),
            battery.id());
        ref.reason = "D_" + std::to_string(axis + 1) + " R not negligible on the tube at m=" +
                     std::to_string(m);
        ref.max_order = m - 1;
        out.derivative_hypothesis = std::move(ref);
        break;
      }
      out.derivative_hypothesis.order_certificates.emplace_back(m, found);
    }
  }

  // spread against the point value
  out.spread = Verdict::supported_up_to(cfg.m_max, battery.id());
  for (int m = 1; m <= cfg.m_max; ++m) {
    int found = -1;
    std::vector<Sample> last;
    Witness last_witness;
    for (int q = 0; q <= q_cap && found < 0; ++q) {
      std::vector<Sample> samples;
      const TestFunction& gen = battery.phi(q);
      for (double eps : grid.values()) {
        TestFunction phi = scale(gen, eps);
        Vec xv = x(phi);
        bool base_ok = r.guard_ok(phi, xv);
        Cplx at_x = base_ok ? r(phi, xv) : Cplx(0.0, 0.0);
        double worst = 0.0;
        Vec arg = k1.grid().front();
        for (const Vec& y : k1.grid()) {
          if (!r.guard_ok(phi, y)) {
            ++out.spread.skipped_guard_pairs;
            continue;
          }
          double v = std::abs(r(phi, y) - at_x);
          if (v > worst) {
            worst = v;
            arg = y;
          }
        }
        samples.push_back({eps, worst});
        if (!(worst <= std::pow(eps, m)) && eps < cutoff && last_witness.eps == 0.0) {
          last_witness.generator_id = gen.generator_id();
          last_witness.q = q;
          last_witness.eps = eps;
          last_witness.x = arg;
          last_witness.magnitude = worst;
          last_witness.exponent = m;
          last_witness.bound = std::pow(eps, m);
          last_witness.note = "spread against R(X)";
        }
      }
      if (landau_check(samples, static_cast<double>(m), cutoff)) found = q;
      last = std::move(samples);
    }
    if (found < 0) {
      Verdict ref = Verdict::refuted(last_witness, battery.id());
      ref.reason = "spread not negligible at m=" + std::to_string(m);
      ref.max_order = m - 1;
      ref.order_certificates = out.spread.order_certificates;
      ref.skipped_guard_pairs = out.spread.skipped_guard_pairs;
      try {
        ref.estimates.push_back(fit_order(last));
      } catch (const Error&) {
      }
      out.spread = std::move(ref);
      break;
    }
    out.spread.order_certificates.emplace_back(m, found);
  }
  return out;
}

}  // namespace colombeau
