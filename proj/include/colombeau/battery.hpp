#pragma once

#include "colombeau/eps_grid.hpp"
#include "colombeau/test_function.hpp"

#include <string>
#include <vector>

namespace colombeau {

/// Finite stand-in for the paper's quantifiers over A_q: one factory
/// generator per moment order q = 0..q_max, with the eps grid the sweeps
/// run on. Every phi_q carries the exact certificate phi_q in A_q \ A_{q+1}.
class TestBattery {
 public:
  TestBattery(int dim, int q_max, double rho, EpsGrid grid, const MomentConfig& cfg = {});

  int dim() const { return dim_; }
  int q_max() const { return q_max_; }
  double rho() const { return rho_; }
  const EpsGrid& grid() const { return grid_; }
  const MomentConfig& config() const { return cfg_; }

  const TestFunction& phi(int q) const;
  const GeneratorRegistry& registry() const { return registry_; }

  /// Stable identifier embedded in verdicts and reports.
  const std::string& id() const { return id_; }

 private:
  int dim_;
  int q_max_;
  double rho_;
  EpsGrid grid_;
  MomentConfig cfg_;
  std::vector<TestFunction> phis_;
  GeneratorRegistry registry_;
  std::string id_;
};

}  // namespace colombeau
