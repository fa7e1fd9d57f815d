#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dmopt/graph.hpp"
#include "dmopt/optimizer.hpp"
#include "dmopt/problems.hpp"

namespace dmopt {

enum class GraphKind { kComplete, kPath, kEdges };

struct GraphSpec {
  GraphKind kind = GraphKind::kComplete;
  std::vector<std::pair<int, int>> edge_list;  // 1-based, used when kEdges
};

/// Fully resolved run description. Everything a run needs is derived from
/// these fields plus the seed, so a config round-trips through JSON and two
/// runs of the same config produce byte-identical traces.
struct RunConfig {
  int m = 0;
  int n = 0;
  GraphSpec graph;
  std::uint64_t seed = 0;
  double alpha0 = 0.2;
  bool c_auto = true;        // gain defaults to 0.9 / max_degree
  double c = 0.0;            // used when !c_auto
  long iterations = 0;
  long record_every = 1;
  Box box{-1000.0, 1000.0};
  bool priorities_random = true;
  Eigen::MatrixXd priorities_table;  // m x m, used when !priorities_random
  double min_weight = 0.05;
  bool initial_x_random = true;      // uniform in the box
  Eigen::MatrixXd initial_x_table;   // m x n, used when !initial_x_random
  GradientAt gradient_at = GradientAt::kIterate;
  bool epsilon_auto = true;  // threshold for the bound window defaults to alpha0
  double epsilon = 0.0;
  std::string out_dir;

  bool operator==(const RunConfig& other) const;
};

/// Parses a JSON config document, applies defaults, validates every field
/// (unknown keys are rejected), and resolves "auto" values that need the
/// graph, like the consensus gain range.
RunConfig parse_config(const std::string& text);

/// Applies a partial JSON document on top of an existing config; same strict
/// field rules as parse_config.
RunConfig apply_overrides(RunConfig base, const std::string& text);

std::string serialize_config(const RunConfig& cfg);

/// FNV-1a of the serialized config, recorded in run metadata.
std::uint64_t config_hash(const RunConfig& cfg);

/// Builds the topology named by the config.
Graph resolve_graph(const RunConfig& cfg);

/// Resolved consensus gain (auto -> 0.9 / max_degree).
double resolve_gain(const RunConfig& cfg, const Graph& g);

/// Initial priorities: the explicit table, or the seeded random recipe.
Eigen::MatrixXd resolve_priorities(const RunConfig& cfg);

/// Initial iterates: the explicit table, or uniform draws inside the box.
Eigen::MatrixXd resolve_initial_x(const RunConfig& cfg);

/// Per-agent problem instances regenerated from (seed, n, m).
std::vector<QuadraticProblem> resolve_problems(const RunConfig& cfg);

double resolve_epsilon(const RunConfig& cfg);

/// Built-in scenario presets: "pareto2", "quad3x10", "quad100x100".
RunConfig scenario_config(const std::string& name);

}  // namespace dmopt
