#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dmopt/consensus.hpp"
#include "dmopt/graph.hpp"
#include "dmopt/mixing.hpp"
#include "dmopt/problems.hpp"

namespace dmopt {

/// Diminishing step size alpha_k = alpha0 / k for k >= 1.
struct StepSchedule {
  double alpha0 = 0.2;
};

double step_size(long k, const StepSchedule& schedule);

/// Coordinatewise clamp onto the box. Rejects NaN input.
Eigen::VectorXd project_box(const Eigen::VectorXd& p, const Box& box);

/// Which point gradients are taken at: the agent's own iterate (the update
/// law as written) or the freshly mixed state.
enum class GradientAt { kIterate, kMixed };

/// Swarm iterates after k completed steps. Rows are agents: x(i, :) is agent
/// i's decision vector. `v` and `phi_err` hold the mixed states and
/// projection errors of the most recent step, `y` the current average
/// iterate. `k` counts the next step to execute (starts at 1).
struct SwarmState {
  Eigen::MatrixXd x;
  Eigen::MatrixXd v;
  Eigen::MatrixXd phi_err;
  Eigen::VectorXd y;
  long k = 1;
};

/// Validates iterates (finite, inside the box) and seeds the state.
SwarmState make_swarm_state(Eigen::MatrixXd x0, const Box& box);

Eigen::VectorXd average_state(const SwarmState& state);

/// Everything one iteration produced; `algorithm_step` returns the slice the
/// caller usually needs, the full record feeds observers and invariant tests.
struct StepOutputs {
  SwarmState state;
  PriorityState priorities;
  MixingMatrix mixing;
  Eigen::MatrixXd gradients;
  double alpha = 0.0;
};

/// One interlaced iteration, in order: priority averaging step, mixing
/// matrix build, state mixing v_i = sum_j a_ij x_j, then the projected
/// gradient step x_i <- P[v_i - alpha_k grad f_i]. Projection errors
/// phi_i = P[v_i - alpha d_i] - (v_i - alpha d_i) are recorded on the state.
StepOutputs algorithm_step_full(const SwarmState& state,
                                const PriorityState& priorities,
                                const Graph& g,
                                const std::vector<QuadraticProblem>& problems,
                                const StepSchedule& schedule, const Box& box,
                                GradientAt gradient_at = GradientAt::kIterate);

std::pair<SwarmState, PriorityState> algorithm_step(
    const SwarmState& state, const PriorityState& priorities, const Graph& g,
    const std::vector<QuadraticProblem>& problems, const StepSchedule& schedule,
    const Box& box, GradientAt gradient_at = GradientAt::kIterate);

}  // namespace dmopt
