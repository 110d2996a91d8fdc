#include "colombeau/report.hpp"

#include "colombeau/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace colombeau {

using nlohmann::ordered_json;

bool Report::any_error() const {
  for (const auto& t : tasks)
    if (t.errored) return true;
  return false;
}

namespace {

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

}  // namespace

ordered_json to_json(const Witness& w) {
  ordered_json j;
  j["q"] = w.q;
  j["eps"] = w.eps;
  if (w.x.size() > 0) j["x"] = vec_json(w.x);
  if (w.translation.size() > 0) j["translation"] = vec_json(w.translation);
  if (!w.alpha.empty() && order_of(w.alpha) > 0) j["alpha"] = w.alpha;
  j["exponent"] = w.exponent;
  j["magnitude"] = w.magnitude;
  j["bound"] = w.bound;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

ordered_json to_json(const OrderEstimate& e) {
  ordered_json j;
  j["slope"] = e.slope;
  j["intercept"] = e.intercept;
  j["residual"] = e.residual;
  j["window_first"] = e.window_first;
  j["window_last"] = e.window_last;
  j["excluded_zeros"] = e.excluded_zeros;
  return j;
}

ordered_json to_json(const Verdict& v) {
  ordered_json j;
  j["kind"] = to_string(v.kind);
  if (v.max_order >= 0) j["max_order"] = v.max_order;
  if (v.cert_q >= 0) j["cert_q"] = v.cert_q;
  if (!v.order_certificates.empty()) {
    ordered_json oc = ordered_json::array();
    for (auto [m, q] : v.order_certificates) oc.push_back(ordered_json{{"m", m}, {"q", q}});
    j["order_certificates"] = oc;
  }
  if (!v.witnesses.empty()) {
    ordered_json w = ordered_json::array();
    for (const auto& x : v.witnesses) w.push_back(to_json(x));
    j["witnesses"] = w;
  }
  if (!v.estimates.empty()) {
    ordered_json e = ordered_json::array();
    for (const auto& x : v.estimates) e.push_back(to_json(x));
    j["estimates"] = e;
  }
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.battery_id.empty()) j["battery"] = v.battery_id;
  if (v.skipped_guard_pairs > 0) j["skipped_guard_pairs"] = v.skipped_guard_pairs;
  return j;
}

ordered_json report_to_json(const Report& r, bool include_timing) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["scenario"] = r.scenario_name;
  j["battery"] = r.battery_manifest;
  ordered_json tasks = ordered_json::array();
  for (const auto& t : r.tasks) {
    ordered_json tj;
    tj["name"] = t.name;
    tj["kind"] = t.kind;
    if (!t.target.empty()) tj["target"] = t.target;
    if (t.errored) {
      tj["error"] = t.error;
    } else {
      if (t.has_verdict) tj["verdict"] = to_json(t.verdict);
      if (!t.estimates.empty()) {
        ordered_json e = ordered_json::array();
        for (const auto& x : t.estimates) e.push_back(to_json(x));
        tj["estimates"] = e;
      }
      if (!t.extra.is_null()) tj["extra"] = t.extra;
    }
    if (include_timing) tj["wall_ms"] = t.wall_ms;
    tasks.push_back(tj);
  }
  j["tasks"] = tasks;
  return j;
}

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "task,kind,estimate_index,slope,intercept,residual,window_first,window_last,excluded_zeros\n";
  for (const auto& t : r.tasks) {
    size_t idx = 0;
    auto row = [&](const OrderEstimate& e) {
      os << t.name << ',' << t.kind << ',' << idx++ << ',' << e.slope << ',' << e.intercept << ','
         << e.residual << ',' << e.window_first << ',' << e.window_last << ',' << e.excluded_zeros
         << '\n';
    };
    for (const auto& e : t.estimates) row(e);
    if (t.has_verdict)
      for (const auto& e : t.verdict.estimates) row(e);
  }
  return os.str();
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "scenario " << r.scenario_name << "\n";
  if (r.battery_manifest.contains("id"))
    os << "battery " << r.battery_manifest["id"].get<std::string>() << "\n";
  for (const auto& t : r.tasks) {
    os << "task " << t.name << " [" << t.kind << "]: ";
    if (t.errored) {
      os << "ERROR " << t.error;
    } else if (t.has_verdict) {
      os << to_string(t.verdict.kind);
      if (t.verdict.max_order >= 0) os << " max_order=" << t.verdict.max_order;
      if (t.verdict.cert_q >= 0) os << " q=" << t.verdict.cert_q;
      if (!t.verdict.witnesses.empty()) os << " witnesses=" << t.verdict.witnesses.size();
    } else if (!t.estimates.empty()) {
      os << "slope=" << t.estimates.front().slope
         << " residual=" << t.estimates.front().residual;
    } else {
      os << "done";
    }
    os << " (" << t.wall_ms << " ms)\n";
  }
  return os.str();
}

void emit(const Report& r, const std::string& out_dir, const std::vector<std::string>& formats,
          bool include_timing) {
  std::filesystem::create_directories(out_dir);
  for (const auto& fmt : formats) {
    std::string path = out_dir + "/report." + fmt;
    std::ofstream out(path);
    if (!out) throw Error("emit: cannot write " + path);
    if (fmt == "json")
      out << report_to_json(r, include_timing).dump(2) << "\n";
    else if (fmt == "csv")
      out << report_to_csv(r);
    else if (fmt == "text")
      out << report_to_text(r);
    else
      throw PreconditionError("emit: unknown format " + fmt);
  }
}

}  // namespace colombeau
