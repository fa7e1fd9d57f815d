#pragma once

#include <string>

#include "dmopt/config.hpp"

namespace dmopt {

struct ScenarioResult {
  std::string trace_csv;
  std::string bounds_csv;
  std::string sweep_csv;  // pareto2 only
  std::string summary_json;
  double final_f_of_y = 0.0;
  double oracle_f_star = 0.0;
  double relative_gap = 0.0;
  double final_disagreement = 0.0;
  double runtime_seconds = 0.0;
};

/// Runs a scenario end to end and writes its artifacts (trace CSV, bounds
/// CSV, sweep CSV for pareto2, summary JSON) under `out_dir`. `name` is one
/// of the presets or "custom" (config supplied by the caller). `full`
/// switches quad100x100 from the scaled default (m=20, n=20) to the
/// full-size run (m=100, n=100).
ScenarioResult run_scenario(const std::string& name, const RunConfig& cfg,
                            const std::string& out_dir);

/// Preset plus `full` switch applied; "custom" returns `base` untouched.
RunConfig scenario_with_flags(const std::string& name, bool full);

}  // namespace dmopt
