#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "dmopt/graph.hpp"

namespace dmopt {

/// Stack of agent priority vectors plus the consensus gain. Row i of `w` is
/// agent i's priority vector: w(i, j) weights objective j. Every row sums to
/// 1 with entries in (0, 1); the gain must satisfy 0 < c < 1/max_degree.
struct PriorityState {
  Eigen::MatrixXd w;
  double c = 0.0;
};

/// Validates row simplexes and returns the state. Throws a simplex error on
/// bad rows. The gain is range-checked against the graph at step time.
PriorityState make_priority_state(Eigen::MatrixXd w, double c);

/// Default consensus gain for a graph: 0.9/max_degree, safely inside the
/// admissible open interval (0.5 for a single agent, where any gain works).
double default_gain(const Graph& g);

/// One priority averaging step: each agent moves toward its neighbors,
///   w_i <- w_i + c * sum_{j ~ i} (w_j - w_i),
/// realized as the network-level product (I - c L) W with agents along the
/// mixed axis. Per-agent row sums are preserved and the global minimum entry
/// never decreases.
PriorityState priority_step(const PriorityState& state, const Graph& g);

/// Arithmetic mean of the m priority vectors; this is the common vector the
/// iteration converges to on a connected graph.
Eigen::VectorXd average_priorities(const PriorityState& w0);

/// Random initial priorities: per agent, m uniform draws floored at
/// `min_weight` and normalized to sum 1. The floor keeps the smallest
/// initial weight bounded away from zero.
Eigen::MatrixXd random_priorities(std::uint64_t seed, int m, double min_weight);

}  // namespace dmopt
