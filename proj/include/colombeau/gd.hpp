#pragma once

#include "colombeau/battery.hpp"
#include "colombeau/efunc.hpp"
#include "colombeau/verdict.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace colombeau {

/// Test-object net (eps, x) -> test function, all values in A_q for the
/// declared q. Boundedness is certified by a finite sample check.
class TestObjectNet {
 public:
  using Rule = std::function<TestFunction(double, const Vec&)>;

  TestObjectNet(Rule rule, int declared_q, std::string name = "net");

  static TestObjectNet constant(const TestFunction& phi, std::string name = "const");

  TestFunction at(double eps, const Vec& x) const { return rule_(eps, x); }
  int declared_q() const { return declared_q_; }
  const std::string& name() const { return name_; }

  struct BoundednessCert {
    bool ok = false;
    double max_radius = 0.0;
    double max_sup = 0.0;
    int min_certified_order = 0;
    std::string note;
  };

  /// Samples support radii, sup norms, and certified orders over the grid
  /// and the compact set.
  BoundednessCert check_bounded(const EpsGrid& grid, const CompactBox& K) const;

 private:
  Rule rule_;
  int declared_q_;
  std::string name_;
};

/// J-formalism representative: a rule on pairs with absolute support in
/// Omega (supp phi inside Omega, no translation by x).
class JFunc {
 public:
  using Rule = std::function<Cplx(const TestFunction&, const Vec&, const MultiIndex&)>;

  JFunc(Domain omega, int deriv_order, Rule rule);

  int dim() const { return omega_.dim(); }
  const Domain& domain() const { return omega_; }
  int deriv_order() const { return deriv_order_; }

  bool guard_ok(const TestFunction& phi) const;

  Cplx operator()(const TestFunction& phi, const Vec& x) const;
  Cplx deriv(const TestFunction& phi, const Vec& x, const MultiIndex& alpha) const;

 private:
  Domain omega_;
  int deriv_order_;
  Rule rule_;
};

/// Formalism translation (T^-1)*: J(phi, x) = R(T_-x phi, x). The tag
/// algebra makes the round trip exact.
JFunc to_jfunc(const EFunc& r);
/// T*: R(phi, x) = J(T_x phi, x).
EFunc to_efunc(const JFunc& j);

/// Generalized point of the G^d interface: a rule on (phi, x) pairs with
/// one representative whose range sits in the compact box L.
struct GdPoint {
  std::function<Vec(const TestFunction&, const Vec&)> rule;
  Box range_box;

  Vec operator()(const TestFunction& phi, const Vec& x) const;

  static GdPoint constant(const Vec& x0, Box range);
  /// Lift a G^e point (the x slot is ignored, matching the constancy
  /// requirement on generalized numbers).
  static GdPoint from_ge(const GenPointGe& x);
};

/// Conjugated point (T^-1)* X for the J-side evaluation formula.
GdPoint to_jpoint(const GdPoint& x);

/// Partial point value: defined only where the guard holds; undefined
/// pairs are skipped and counted.
class GdPointValue {
 public:
  struct Result {
    bool defined = false;
    Cplx value{0.0, 0.0};
  };

  using Rule = std::function<Result(const TestFunction&, const Vec&)>;

  explicit GdPointValue(Rule rule);

  Result operator()(const TestFunction& phi, const Vec& x) const;

  std::int64_t evaluated() const { return counters_->evaluated; }
  std::int64_t skipped() const { return counters_->skipped; }

 private:
  struct Counters {
    std::int64_t evaluated = 0;
    std::int64_t skipped = 0;
  };
  Rule rule_;
  std::shared_ptr<Counters> counters_;
};

/// C-formalism evaluation R(X)(phi, x) = R(phi, X(phi, x)), direct on
/// guarded pairs (the smooth cutoff agrees with this for small eps).
GdPointValue gd_point_eval_C(const EFunc& r, const GdPoint& x);
/// J-formalism evaluation R(X)(phi, x) = R(T_{X(phi,x)-x} phi, X(phi, x)).
GdPointValue gd_point_eval_J(const JFunc& r, const GdPoint& x);

/// T* pullback of a J-side point value, for the consistency identity
/// T*(R^J(X^J)) = R(X).
GdPointValue pullback_to_c(const GdPointValue& v);

/// Warning verdict when more than half of a sweep's pairs are unguarded.
Verdict gd_guard_sweep(const GdPointValue& v,
                       const std::vector<std::pair<TestFunction, Vec>>& pairs);

/// Moderateness sweep with phi replaced by the net's phi(eps, x); the
/// registered nets play the battery's role.
Verdict gd_moderate_verdict(const EFunc& r, const CompactBox& K, int alpha_max,
                            const std::vector<TestObjectNet>& nets, const EpsGrid& grid,
                            int n_cap = 8);

Verdict gd_negligible_verdict(const EFunc& r, const CompactBox& K, int m_max,
                              const std::vector<TestObjectNet>& nets, const EpsGrid& grid);

/// Exact x-independence on sampled pairs (the V_M constancy condition).
bool constancy_check(const GdPoint& x,
                     const std::vector<std::tuple<TestFunction, Vec, Vec>>& samples,
                     Witness* witness = nullptr);

}  // namespace colombeau
