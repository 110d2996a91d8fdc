#pragma once

#include "colombeau/verdict.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace colombeau {

struct TaskRecord {
  std::string name;
  std::string kind;
  std::string target;
  bool errored = false;
  std::string error;
  bool has_verdict = false;
  Verdict verdict;
  std::vector<OrderEstimate> estimates;
  nlohmann::ordered_json extra;  // task-specific payload (evidence tables, bounds)
  double wall_ms = 0.0;
};

struct Report {
  int schema_version = 1;
  std::string scenario_name;
  nlohmann::ordered_json battery_manifest;
  std::vector<TaskRecord> tasks;

  bool any_error() const;
};

nlohmann::ordered_json to_json(const Witness& w);
nlohmann::ordered_json to_json(const OrderEstimate& e);
nlohmann::ordered_json to_json(const Verdict& v);

/// Deterministic structured record; wall times only when timing is on.
nlohmann::ordered_json report_to_json(const Report& r, bool include_timing = false);
/// One row per (task, order estimate).
std::string report_to_csv(const Report& r);
/// Human summary, one line per task plus certificates. Always shows timing.
std::string report_to_text(const Report& r);

/// Writes report.<fmt> for each requested format into out_dir.
void emit(const Report& r, const std::string& out_dir, const std::vector<std::string>& formats,
          bool include_timing = false);

}  // namespace colombeau
