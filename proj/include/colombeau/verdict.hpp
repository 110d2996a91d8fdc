#pragma once

#include "colombeau/order_fit.hpp"
#include "colombeau/types.hpp"

#include <string>
#include <vector>

namespace colombeau {

/// Everything needed to replay a violating evaluation: which generator,
/// how it was scaled/translated, where it was evaluated, and what came out.
struct Witness {
  std::int64_t generator_id = -1;
  int q = -1;          // battery order of the generator, if applicable
  double eps = 0.0;    // scale at which the violation was observed
  Vec translation;     // empty when untranslated
  Vec x;               // evaluation point (empty for number-level tests)
  MultiIndex alpha;    // derivative tested (empty for order 0)
  int exponent = 0;    // the p (or m, or -N) whose Landau bound failed
  double magnitude = 0.0;
  double bound = 0.0;  // eps^exponent at the witness
  std::string note;
};

enum class VerdictKind { RefutedWithWitness, SupportedUpTo, Inconclusive };

const char* to_string(VerdictKind k);

/// Finite-battery surrogate for the paper's asymptotic quantifiers: a
/// refutation always carries a replayable witness; support is only ever
/// up to the orders and test functions actually swept.
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  int max_order = -1;   // SupportedUpTo: highest m (or N bound) certified
  int cert_q = -1;      // moment order certificate where the sweep succeeded
  std::string battery_id;
  std::vector<Witness> witnesses;
  std::string reason;
  std::vector<OrderEstimate> estimates;  // diagnostic fits collected in the sweep
  std::vector<std::pair<int, int>> order_certificates;  // (m, q) pairs of a negligibility sweep
  std::int64_t skipped_guard_pairs = 0;  // (phi, x) pairs outside U(Omega)

  bool refuted() const { return kind == VerdictKind::RefutedWithWitness; }
  bool supported() const { return kind == VerdictKind::SupportedUpTo; }

  static Verdict supported_up_to(int order, std::string battery = {}) {
    Verdict v;
    v.kind = VerdictKind::SupportedUpTo;
    v.max_order = order;
    v.battery_id = std::move(battery);
    return v;
  }
  static Verdict refuted(Witness w, std::string battery = {}) {
    Verdict v;
    v.kind = VerdictKind::RefutedWithWitness;
    v.witnesses.push_back(std::move(w));
    v.battery_id = std::move(battery);
    return v;
  }
  static Verdict inconclusive(std::string why) {
    Verdict v;
    v.kind = VerdictKind::Inconclusive;
    v.reason = std::move(why);
    return v;
  }
};

}  // namespace colombeau
