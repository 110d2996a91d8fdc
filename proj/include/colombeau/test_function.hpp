#pragma once

#include "colombeau/polynomial.hpp"
#include "colombeau/types.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace colombeau {

/// Default tolerances of the moment factory and its certificates.
struct MomentConfig {
  double tol_moment = 1e-9;        // below this a moment counts as vanishing
  double order_threshold = 1e-6;   // above this a moment certifies a violation
  int factory_nodes_1d = 128;      // internal quadrature of the moment solve
  int factory_nodes_2d = 160;
  int factory_nodes_nd = 96;

  int nodes_for(int dim) const {
    return dim == 1 ? factory_nodes_1d : dim == 2 ? factory_nodes_2d : factory_nodes_nd;
  }
};

/// Unscaled, untranslated profile P(t)/u(t)^m * exp(-1/u(t)) over the unit
/// ball, u(t) = 1 - |t|^2, evaluated in y through t = y/rho. The family is
/// closed under differentiation, so derivative evaluators of any order are
/// exact closed forms.
class Generator {
 public:
  Generator(int dim, double rho, Polynomial numerator, double mass);

  int dim() const { return dim_; }
  double rho() const { return rho_; }
  std::int64_t id() const { return id_; }
  double mass() const { return mass_; }

  int certified_order() const { return certified_order_; }
  double next_moment() const { return next_moment_; }
  void set_certificate(int order, double next) {
    certified_order_ = order;
    next_moment_ = next;
  }

  /// Physical value of the profile (includes the rho^-n mass factor).
  double eval(const Vec& y) const;
  /// Physical derivative of the profile, any multi-index order.
  double eval_deriv(const Vec& y, const MultiIndex& alpha) const;

  /// Unit-ball moment of the profile against t^alpha (dy-moments are
  /// rho^|alpha| times these).
  double unit_moment(const MultiIndex& alpha, int nodes) const;

 private:
  struct KernelForm {
    Polynomial num;
    int upow = 0;
  };
  const KernelForm& derivative_form(const MultiIndex& alpha) const;
  double eval_form(const KernelForm& f, const Vec& t) const;

  int dim_;
  double rho_;
  std::int64_t id_;
  double mass_;
  int certified_order_ = -1;
  double next_moment_ = 0.0;
  KernelForm base_;
  mutable std::map<MultiIndex, KernelForm> deriv_cache_;
  mutable std::mutex cache_mutex_;
};

/// Compactly supported smooth test function: a shared generator plus the
/// scale/translation tags. (S_eps phi)(y) = eps^-n phi(y/eps) and
/// (T_x phi)(y) = phi(y - x); tags compose exactly (scales multiply,
/// translations add), which is what makes the case splits of the point
/// constructions decidable.
class TestFunction {
 public:
  TestFunction(std::shared_ptr<const Generator> gen, double scale, Vec center);

  int dim() const { return gen_->dim(); }
  double scale() const { return scale_; }
  const Vec& center() const { return center_; }
  std::int64_t generator_id() const { return gen_->id(); }
  const Generator& generator() const { return *gen_; }
  std::shared_ptr<const Generator> generator_ptr() const { return gen_; }

  double mass() const { return gen_->mass(); }
  double support_radius() const { return scale_ * gen_->rho(); }
  bool unscaled_untranslated() const;

  double operator()(const Vec& y) const;
  double deriv(const Vec& y, const MultiIndex& alpha) const;

 private:
  std::shared_ptr<const Generator> gen_;
  double scale_;
  Vec center_;
};

/// Normalized bump c * exp(-1/(1 - |y/rho|^2)) with integral 1.
TestFunction make_bump(int n, double rho, const MomentConfig& cfg = {});

/// Bump-weighted polynomial with prescribed moments: integral `mass`,
/// vanishing moments through order q, and the designated (q+1,0,...,0)
/// moment equal to 1 with all other order-(q+1) moments zero. The exact
/// certificate phi in A_q \ A_{q+1} is re-derived by quadrature.
TestFunction make_moment_testfn(int n, int q, int mass, double rho, const MomentConfig& cfg = {});

/// Largest a <= q_max whose moments of orders 1..a all fall below tol,
/// plus the largest-magnitude (a+1)-moment; (q_max, 0) when no violation
/// shows up. Requires the unscaled, untranslated representative.
std::pair<int, double> moment_order(const TestFunction& phi, int q_max, double tol,
                                    const MomentConfig& cfg = {});

TestFunction scale(const TestFunction& phi, double eps);
TestFunction translate(const TestFunction& phi, const Vec& x);

struct ScaledMatch {
  std::int64_t generator_id;
  double eps;
  Vec x;
};

/// Append-only id -> generator table; lookups are exact tag matches and
/// never compare function values. State is shared across copies so the
/// table stays movable.
class GeneratorRegistry {
 public:
  GeneratorRegistry() : state_(std::make_shared<State>()) {}

  void add(const TestFunction& phi);
  void add(std::shared_ptr<const Generator> gen);
  bool has(std::int64_t id) const;
  std::shared_ptr<const Generator> get(std::int64_t id) const;

  std::optional<ScaledMatch> match_scaled(const TestFunction& psi) const;

 private:
  struct State {
    std::map<std::int64_t, std::shared_ptr<const Generator>> gens;
    mutable std::mutex mutex;
  };
  std::shared_ptr<State> state_;
};

}  // namespace colombeau
