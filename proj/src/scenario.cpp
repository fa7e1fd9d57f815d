#include "dmopt/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dmopt/bounds.hpp"
#include "dmopt/error.hpp"
#include "dmopt/pareto.hpp"
#include "dmopt/runner.hpp"
#include "dmopt/trace.hpp"

namespace dmopt {

namespace fs = std::filesystem;

RunConfig scenario_with_flags(const std::string& name, bool full) {
  if (name == "custom") {
    fail(ErrorKind::kUsage, "custom scenarios need an explicit config");
  }
  RunConfig cfg = scenario_config(name);
  if (name == "quad100x100" && full) {
    cfg.m = 100;
    cfg.n = 100;
    cfg.iterations = 100000;
    cfg.record_every = 1000;
  }
  return cfg;
}

namespace {

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorKind::kUsage, "cannot open " + path.string() + " for writing");
  os << contents;
}

}  // namespace

ScenarioResult run_scenario(const std::string& name, const RunConfig& cfg,
                            const std::string& out_dir) {
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);

  Trace trace = run_trace(cfg);
  const Graph g = resolve_graph(cfg);

  ScenarioResult result;
  {
    std::ostringstream os;
    write_trace_csv(os, trace);
    result.trace_csv = (dir / "trace.csv").string();
    write_file(result.trace_csv, os.str());
  }
  {
    std::ostringstream os;
    write_bounds_csv(os, trace, g);
    result.bounds_csv = (dir / "bounds.csv").string();
    write_file(result.bounds_csv, os.str());
  }

  int failed_sweep_points = 0;
  if (name == "pareto2") {
    const auto points = sweep(cfg, default_sweep_grid());
    std::ostringstream os;
    write_sweep_csv(os, points);
    result.sweep_csv = (dir / "sweep.csv").string();
    write_file(result.sweep_csv, os.str());
    for (const auto& pt : points) {
      if (!pt.error.empty()) ++failed_sweep_points;
    }
  }

  const TraceRecord& last = trace.records.back();
  result.final_f_of_y = last.f_of_y;
  result.oracle_f_star = trace.f_star;
  result.relative_gap =
      std::abs(last.f_of_y - trace.f_star) / std::abs(trace.f_star);
  result.final_disagreement = last.disagreement;
  result.runtime_seconds = trace.runtime_seconds;

  nlohmann::ordered_json summary;
  summary["scenario"] = name;
  summary["seed"] = cfg.seed;
  summary["m"] = cfg.m;
  summary["n"] = cfg.n;
  summary["iterations"] = cfg.iterations;
  summary["alpha0"] = cfg.alpha0;
  summary["final_f_of_y"] = result.final_f_of_y;
  summary["oracle_f_star"] = result.oracle_f_star;
  summary["relative_gap"] = result.relative_gap;
  summary["final_disagreement"] = result.final_disagreement;
  summary["runtime_seconds"] = result.runtime_seconds;
  summary["config_hash"] = trace.config_hash;
  summary["trace_csv"] = result.trace_csv;
  summary["bounds_csv"] = result.bounds_csv;
  if (!result.sweep_csv.empty()) summary["sweep_csv"] = result.sweep_csv;
  if (failed_sweep_points > 0) summary["failed_sweep_points"] = failed_sweep_points;
  result.summary_json = (dir / "summary.json").string();
  write_file(result.summary_json, summary.dump(2) + "\n");

  return result;
}

}  // namespace dmopt
