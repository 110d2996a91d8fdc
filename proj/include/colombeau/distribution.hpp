#pragma once

#include "colombeau/box.hpp"
#include "colombeau/test_function.hpp"
#include "colombeau/types.hpp"

#include <functional>
#include <memory>
#include <string>

namespace colombeau {

/// Smooth compactly supported evaluand: what a distribution acts on. Test
/// functions convert to this; linear combinations stay pairable.
struct LocalField {
  int dim = 1;
  Vec center;
  double radius = 0.0;
  std::function<double(const Vec&, const MultiIndex&)> eval;

  double operator()(const Vec& y) const { return eval(y, MultiIndex(static_cast<size_t>(dim), 0)); }
};

LocalField as_field(const TestFunction& phi);
LocalField lin_comb(double a, const LocalField& f, double b, const LocalField& g);

/// Classical distribution with a computable action on test functions:
/// smooth functions and locally integrable functions pair by quadrature,
/// delta derivatives and the Heaviside step have exact actions.
class DistributionSpec {
 public:
  enum class Kind { SmoothFunction, DeltaDerivative, Heaviside, LocallyIntegrable };

  /// Smooth closed form with derivative evaluators f(y, alpha).
  static DistributionSpec smooth(int n, std::function<Cplx(const Vec&, const MultiIndex&)> f,
                                 std::string name = "smooth");
  static DistributionSpec delta(int n, MultiIndex order = {});
  static DistributionSpec heaviside();
  static DistributionSpec locally_integrable(int n, std::function<Cplx(const Vec&)> f,
                                             std::string name = "loc_int");

  /// sum_j c_j y^j on the line, with exact derivative rules.
  static DistributionSpec polynomial(std::vector<double> coeffs);
  static DistributionSpec sine();

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const MultiIndex& delta_order() const { return delta_order_; }

  /// Distributional derivative along one axis (H -> delta, delta^k ->
  /// delta^{k+e_i}, smooth f -> f'). LocallyIntegrable has none.
  DistributionSpec derivative(int axis) const;

  Cplx smooth_eval(const Vec& y, const MultiIndex& alpha) const { return smooth_(y, alpha); }
  Cplx loc_int_eval(const Vec& y) const { return loc_(y); }

 private:
  Kind kind_;
  int dim_ = 1;
  std::string name_;
  MultiIndex delta_order_;
  std::function<Cplx(const Vec&, const MultiIndex&)> smooth_;
  std::function<Cplx(const Vec&)> loc_;
};

/// <u, d^pre psi>: action of u on a derivative of the field. When a domain
/// is supplied the support ball must be contained in it.
Cplx pair(const DistributionSpec& u, const LocalField& psi, const MultiIndex& pre = {},
          const Domain* omega = nullptr, int nodes_per_axis = 64);

Cplx pair(const DistributionSpec& u, const TestFunction& psi, const MultiIndex& pre = {},
          const Domain* omega = nullptr, int nodes_per_axis = 64);

}  // namespace colombeau
