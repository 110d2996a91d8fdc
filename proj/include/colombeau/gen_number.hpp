#pragma once

#include "colombeau/battery.hpp"
#include "colombeau/test_function.hpp"
#include "colombeau/types.hpp"
#include "colombeau/verdict.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>

namespace colombeau {

struct NumExpr;
using NumExprPtr = std::shared_ptr<const NumExpr>;

/// Combinator tree for generalized-number rules. Tag reads and exact case
/// matches keep the paper's function-identity case splits decidable;
/// black-box equality of rules would not be.
struct NumExpr {
  enum class Op {
    Const,          // c
    ScaleOf,        // scale tag of phi
    Add,            // a + b
    Sub,            // a - b
    Mul,            // a * b
    PowInt,         // a^k, integer k (0 where a = 0 and k < 0)
    Invert,         // 1/a where a != 0, 0 elsewhere
    ZeroPartner,    // 1 where a = 0, 0 elsewhere
    GenIdMatch,     // a if generator id matches, else b
    EvidenceTable,  // exact (generator id, scale) lookup, else a
  };

  Op op = Op::Const;
  Cplx constant{0.0, 0.0};
  int ipow = 1;
  std::int64_t gen_id = -1;
  std::map<std::pair<std::int64_t, double>, Cplx> table;
  NumExprPtr a, b;
};

Cplx eval(const NumExpr& e, const TestFunction& phi);

NumExprPtr num_const(Cplx c);
NumExprPtr num_scale_of();
NumExprPtr num_add(NumExprPtr a, NumExprPtr b);
NumExprPtr num_sub(NumExprPtr a, NumExprPtr b);
NumExprPtr num_mul(NumExprPtr a, NumExprPtr b);
NumExprPtr num_pow(NumExprPtr a, int k);
NumExprPtr num_invert(NumExprPtr a);
NumExprPtr num_zero_partner(NumExprPtr a);
NumExprPtr num_gen_id_match(std::int64_t id, NumExprPtr then, NumExprPtr otherwise);
NumExprPtr num_evidence_table(std::map<std::pair<std::int64_t, double>, Cplx> table,
                              NumExprPtr otherwise);

/// Generalized number in the G^e setting: a total rule on test functions.
/// Combinator-built numbers keep their tree (serializable, exact case
/// analysis); point evaluations and other compositions are closures.
class GenNumberGe {
 public:
  explicit GenNumberGe(NumExprPtr tree);
  GenNumberGe(std::function<Cplx(const TestFunction&)> rule, std::string label);

  Cplx operator()(const TestFunction& phi) const;

  bool has_tree() const { return tree_ != nullptr; }
  const NumExprPtr& tree() const { return tree_; }
  const std::string& label() const { return label_; }

  friend GenNumberGe operator+(const GenNumberGe& r, const GenNumberGe& s);
  friend GenNumberGe operator-(const GenNumberGe& r, const GenNumberGe& s);
  friend GenNumberGe operator*(const GenNumberGe& r, const GenNumberGe& s);
  friend GenNumberGe operator*(Cplx c, const GenNumberGe& r);

  static GenNumberGe constant(Cplx c) { return GenNumberGe(num_const(c)); }
  static GenNumberGe scale_of() { return GenNumberGe(num_scale_of()); }

 private:
  NumExprPtr tree_;
  std::function<Cplx(const TestFunction&)> rule_;
  std::string label_;
};

/// 1/r(phi) where defined and 0 elsewhere; r * invert(r) = 1 exactly
/// wherever r does not vanish.
GenNumberGe invert_number(const GenNumberGe& r);

/// 1 on the zero set of r, 0 elsewhere; r * partner = 0 identically.
GenNumberGe zero_divisor_partner(const GenNumberGe& r);

struct NumConfig {
  int m_max = 8;
  int n_max = 12;
};

/// Search q <= q_max with |r(S_eps phi_q)| >= eps^q (C = 1) across the
/// asymptotic window; Supported carries q, Refuted the failing sequence.
Verdict strictly_nonzero_verdict(const GenNumberGe& r, const TestBattery& battery);

/// Membership sweep for C_M(n): some N with phi_N staying under eps^-N.
Verdict num_moderate_verdict(const GenNumberGe& r, const TestBattery& battery,
                             const NumConfig& cfg = {});

/// Membership sweep for C_N(n): for every m <= m_max some q whose phi_q
/// stays under eps^m; certificates (m, q) attached.
Verdict num_negligible_verdict(const GenNumberGe& r, const TestBattery& battery,
                               const NumConfig& cfg = {});

/// Partial order on real generalized numbers: exact pointwise comparison
/// on the battery first, then a negligible-slack fallback on max(r-s, 0).
Verdict leq_verdict(const GenNumberGe& r, const GenNumberGe& s, const TestBattery& battery,
                    const NumConfig& cfg = {});

}  // namespace colombeau
