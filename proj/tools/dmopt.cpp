#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dmopt/bounds.hpp"
#include "dmopt/config.hpp"
#include "dmopt/error.hpp"
#include "dmopt/pareto.hpp"
#include "dmopt/runner.hpp"
#include "dmopt/scenario.hpp"
#include "dmopt/trace.hpp"

namespace {

struct CommonOpts {
  std::string scenario;
  std::string config_path;
  std::string out_dir = "out";
  std::int64_t seed = -1;
  long record_every = -1;
  bool full = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--scenario", opts.scenario,
                  "preset: pareto2, quad3x10, quad100x100");
  cmd->add_option("--config", opts.config_path, "JSON config path");
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--seed", opts.seed, "override the run seed");
  cmd->add_option("--record-every", opts.record_every,
                  "override the trace recording period");
  cmd->add_flag("--full", opts.full,
                "full-size quad100x100 (m=100, n=100) instead of the scaled run");
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) dmopt::fail(dmopt::ErrorKind::kUsage, "cannot read " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// Scenario preset (if named) with the config file and flag overrides applied.
dmopt::RunConfig resolve_config(const CommonOpts& opts, std::string* name) {
  dmopt::RunConfig cfg;
  if (!opts.scenario.empty()) {
    *name = opts.scenario;
    cfg = dmopt::scenario_with_flags(opts.scenario, opts.full);
    if (!opts.config_path.empty()) {
      cfg = dmopt::apply_overrides(cfg, slurp(opts.config_path));
    }
  } else if (!opts.config_path.empty()) {
    *name = "custom";
    cfg = dmopt::parse_config(slurp(opts.config_path));
  } else {
    dmopt::fail(dmopt::ErrorKind::kUsage, "need --scenario or --config");
  }
  if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);
  if (opts.record_every > 0) cfg.record_every = opts.record_every;
  return cfg;
}

int cmd_run(const CommonOpts& opts) {
  std::string name;
  dmopt::RunConfig cfg = resolve_config(opts, &name);
  const auto result = dmopt::run_scenario(name, cfg, opts.out_dir);
  std::cout << "scenario " << name << ": f(y) = "
            << dmopt::format_g17(result.final_f_of_y)
            << ", f* = " << dmopt::format_g17(result.oracle_f_star)
            << ", relative gap = " << dmopt::format_g17(result.relative_gap)
            << ", disagreement = "
            << dmopt::format_g17(result.final_disagreement) << "\n"
            << "artifacts in " << opts.out_dir << "\n";
  return 0;
}

int cmd_sweep(const CommonOpts& opts) {
  std::string name;
  dmopt::RunConfig cfg = resolve_config(opts, &name);
  if (cfg.m != 2) {
    dmopt::fail(dmopt::ErrorKind::kUsage,
                "the built-in sweep grid is two-agent; use a 2-agent config");
  }
  const auto points = dmopt::sweep(cfg, dmopt::default_sweep_grid());
  std::filesystem::create_directories(opts.out_dir);
  const auto path = std::filesystem::path(opts.out_dir) / "sweep.csv";
  std::ofstream os(path, std::ios::binary);
  dmopt::write_sweep_csv(os, points);
  int failures = 0;
  for (const auto& pt : points) {
    if (!pt.error.empty()) {
      ++failures;
      std::cerr << "sweep point " << pt.run_id << " failed: " << pt.error << "\n";
    }
  }
  std::cout << "wrote " << path.string() << " (" << points.size() - failures
            << "/" << points.size() << " points)\n";
  return failures == 0 ? 0 : 1;
}

int cmd_bounds(const CommonOpts& opts) {
  std::string name;
  dmopt::RunConfig cfg = resolve_config(opts, &name);
  const dmopt::Trace trace = dmopt::run_trace(cfg);
  const dmopt::Graph g = dmopt::resolve_graph(cfg);
  std::filesystem::create_directories(opts.out_dir);
  const auto path = std::filesystem::path(opts.out_dir) / "bounds.csv";
  std::ofstream os(path, std::ios::binary);
  dmopt::write_bounds_csv(os, trace, g);
  std::cout << "wrote " << path.string() << "\n";
  return 0;
}

int cmd_oracle(const CommonOpts& opts, const std::string& dump_path) {
  std::string name;
  dmopt::RunConfig cfg = resolve_config(opts, &name);
  const auto problems = dmopt::resolve_problems(cfg);
  const auto w0 = dmopt::resolve_priorities(cfg);
  const auto wbar =
      dmopt::average_priorities(dmopt::make_priority_state(w0, 0.1));
  const auto sol = dmopt::weighted_optimum(problems, wbar, cfg.box);
  std::cout << "x* =";
  for (Eigen::Index i = 0; i < sol.x_star.size(); ++i) {
    std::cout << ' ' << dmopt::format_g17(sol.x_star(i));
  }
  std::cout << "\nf* = " << dmopt::format_g17(sol.f_star) << "\n";
  if (!dump_path.empty()) {
    std::ofstream os(dump_path, std::ios::binary);
    dmopt::dump_problems(os, problems);
    std::cout << "problems dumped to " << dump_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decentralized priority-consensus optimization simulator"};
  app.require_subcommand(1);

  CommonOpts run_opts, sweep_opts, bounds_opts, oracle_opts;
  std::string dump_path;

  auto* run = app.add_subcommand("run", "run a scenario and write its artifacts");
  add_common(run, run_opts);
  auto* sw = app.add_subcommand("sweep", "priority sweep tracing the Pareto front");
  add_common(sw, sweep_opts);
  auto* bounds = app.add_subcommand("bounds", "bound-versus-measurement CSV");
  add_common(bounds, bounds_opts);
  auto* oracle = app.add_subcommand("oracle", "print the weighted optimum");
  add_common(oracle, oracle_opts);
  oracle->add_option("--dump-problems", dump_path,
                     "also dump the problem instances to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opts);
    if (sw->parsed()) return cmd_sweep(sweep_opts);
    if (bounds->parsed()) return cmd_bounds(bounds_opts);
    if (oracle->parsed()) return cmd_oracle(oracle_opts, dump_path);
  } catch (const dmopt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
