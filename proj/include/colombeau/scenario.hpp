#pragma once

#include "colombeau/report.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace colombeau {

struct ScenarioOverrides {
  std::optional<int> grid_start_exp;
  std::optional<int> grid_end_exp;
  std::optional<int> q_max;
  bool parallel = false;
};

/// Declarative scenario: domain, battery, named objects (distributions,
/// full-algebra expressions, number/point combinator trees, test-object
/// nets) and the task list. One versioned JSON file.
class Scenario {
 public:
  static Scenario from_file(const std::string& path);
  static Scenario from_text(const std::string& text, const std::string& origin = "<memory>");

  const nlohmann::ordered_json& json() const { return j_; }
  const std::string& name() const { return name_; }

 private:
  nlohmann::ordered_json j_;
  std::string name_;
};

/// Executes the task list in file order (or concurrently when the
/// override asks for it; tasks are independent). Task failures land in
/// the report, they do not abort the run.
Report run_scenario(const Scenario& sc, const ScenarioOverrides& overrides = {});

struct ReplayCheck {
  int witnesses_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Re-evaluates every witness recorded in the report through freshly built
/// objects and checks the magnitudes to 1e-12.
ReplayCheck replay_witnesses(const Scenario& sc, const nlohmann::ordered_json& report,
                             const ScenarioOverrides& overrides = {});

}  // namespace colombeau
