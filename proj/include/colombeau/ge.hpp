#pragma once

#include "colombeau/battery.hpp"
#include "colombeau/efunc.hpp"
#include "colombeau/gen_point.hpp"
#include "colombeau/verdict.hpp"

#include <map>
#include <optional>
#include <vector>

namespace colombeau {

struct GeConfig {
  int q_max = 8;
  int m_max = 8;
  int n_max = 12;
  int min_evidence_hits = 5;  // decreasing eps hits per q that count as a subsequence
};

/// Moderateness sweep: for each |alpha| <= alpha_max find the smallest
/// N <= q_max with sup_{K-grid} |d^alpha R(S_eps phi_N, x)| <= eps^-N on
/// the asymptotic window. Guard-violating pairs are skipped and counted.
Verdict ge_moderate_verdict(const EFunc& r, const CompactBox& K, int alpha_max,
                            const TestBattery& battery, const GeConfig& cfg = {});

/// Negligibility sweep at alpha = 0 (moderateness presupposed): for each
/// m <= m_max find q <= q_max whose phi_q stays under eps^m.
Verdict ge_negligible_verdict(const EFunc& r, const CompactBox& K, int m_max,
                              const TestBattery& battery, const GeConfig& cfg = {});

struct EvidenceHit {
  double eps;
  Vec x;
  double magnitude;
};

/// Per-q decreasing eps subsequences where |R(S_eps phi_q, x)| >= eps^m0.
struct Evidence {
  int m0 = 1;
  std::map<int, std::vector<EvidenceHit>> hits;  // q -> hits, eps strictly decreasing
  std::int64_t skipped_guard_pairs = 0;

  std::vector<int> qualifying(int min_hits, int q_from = 1) const;
};

Evidence gather_evidence(const EFunc& r, const CompactBox& K, int m0, const TestBattery& battery,
                         const GeConfig& cfg = {});

/// The point-construction lemma, made exact by tags: scaled battery
/// generators found in the evidence map to their recorded locations,
/// everything else to x0. Throws when fewer than two orders qualify,
/// listing the thin ones.
GenPointGe construct_point(const Evidence& evidence, const Vec& x0, const CompactBox& K,
                           const TestBattery& battery, const GeConfig& cfg = {});

struct CharacterizationResult {
  Verdict verdict;
  std::optional<GenPointGe> point;  // the witnessing generalized point, when refuted
  Evidence evidence;
};

/// Full point-value characterization mechanics: gather evidence, build the
/// witnessing point, and confirm that the point value breaks the Landau
/// bound at m0 along the recorded subsequences.
CharacterizationResult characterization_pipeline(const EFunc& r, const CompactBox& K, int m0,
                                                 const TestBattery& battery,
                                                 const GeConfig& cfg = {});

/// Invertibility test per compact set, with m = q as the theorem allows:
/// some q <= q_max with sup_{K-grid} |R(S_eps phi_q, x)| >= eps^q on the
/// window for every K in the family.
Verdict ge_invertible_verdict(const EFunc& r, const std::vector<CompactBox>& k_family,
                              const TestBattery& battery, const GeConfig& cfg = {});

struct ConstantCheckGe {
  Verdict derivative_hypothesis;  // D_i R negligible on the connecting tube M
  Verdict spread;                 // sup_{K1} |R(S_eps phi, y) - R(S_eps phi, X(S_eps phi))| negligible
  double path_length_bound = 0.0;
  std::vector<Box> tube;
};

/// Constancy via the connecting-curve estimate: constructs the compact
/// tube M and length bound L from the box overlap graph, then reports the
/// derivative hypothesis and the spread test independently.
ConstantCheckGe ge_constant_check(const EFunc& r, const CompactBox& k1, const CompactBox& k2,
                                  const GenPointGe& x, const TestBattery& battery,
                                  const GeConfig& cfg = {});

}  // namespace colombeau
