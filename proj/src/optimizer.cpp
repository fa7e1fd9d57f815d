#include "dmopt/optimizer.hpp"

#include <cmath>
#include <string>

#include "dmopt/error.hpp"

namespace dmopt {

double step_size(long k, const StepSchedule& schedule) {
  if (k < 1) {
    fail(ErrorKind::kOutOfRange,
         "step size is defined for k >= 1, got " + std::to_string(k));
  }
  return schedule.alpha0 / static_cast<double>(k);
}

Eigen::VectorXd project_box(const Eigen::VectorXd& p, const Box& box) {
  if (p.hasNaN()) {
    fail(ErrorKind::kNumeric, "cannot project a NaN point");
  }
  return p.cwiseMax(box.lower).cwiseMin(box.upper);
}

SwarmState make_swarm_state(Eigen::MatrixXd x0, const Box& box) {
  if (!x0.allFinite()) {
    fail(ErrorKind::kNumeric, "initial iterates must be finite");
  }
  if ((x0.array() < box.lower).any() || (x0.array() > box.upper).any()) {
    fail(ErrorKind::kOutOfRange, "initial iterates must lie inside the box");
  }
  SwarmState state;
  state.y = x0.colwise().mean().transpose();
  state.v = x0;
  state.phi_err = Eigen::MatrixXd::Zero(x0.rows(), x0.cols());
  state.x = std::move(x0);
  state.k = 1;
  return state;
}

Eigen::VectorXd average_state(const SwarmState& state) {
  return state.x.colwise().mean().transpose();
}

StepOutputs algorithm_step_full(const SwarmState& state,
                                const PriorityState& priorities,
                                const Graph& g,
                                const std::vector<QuadraticProblem>& problems,
                                const StepSchedule& schedule, const Box& box,
                                GradientAt gradient_at) {
  const int m = g.m;
  const auto n = state.x.cols();
  if (state.x.rows() != m || static_cast<int>(problems.size()) != m) {
    fail(ErrorKind::kShape, "state, graph and problem set disagree on m");
  }
  if (problems.front().q_mat.rows() != n) {
    fail(ErrorKind::kShape, "problem dimension does not match iterates");
  }

  StepOutputs out;
  out.priorities = priority_step(priorities, g);
  out.mixing = build_mixing_matrix(out.priorities, g);
  out.alpha = step_size(state.k, schedule);

  Eigen::MatrixXd v = out.mixing.a * state.x;
  const Eigen::MatrixXd& grad_base =
      gradient_at == GradientAt::kIterate ? state.x : v;
  out.gradients.resize(m, n);
  for (int i = 0; i < m; ++i) {
    out.gradients.row(i) =
        (problems[i].q_mat * grad_base.row(i).transpose() + problems[i].r_vec)
            .transpose();
  }

  Eigen::MatrixXd pre = v - out.alpha * out.gradients;
  Eigen::MatrixXd projected = pre.cwiseMax(box.lower).cwiseMin(box.upper);
  if (!projected.allFinite()) {
    fail(ErrorKind::kDivergence,
         "non-finite iterate at iteration " + std::to_string(state.k));
  }

  out.state.x = std::move(projected);
  out.state.phi_err = out.state.x - pre;
  out.state.v = std::move(v);
  out.state.y = out.state.x.colwise().mean().transpose();
  out.state.k = state.k + 1;
  return out;
}

std::pair<SwarmState, PriorityState> algorithm_step(
    const SwarmState& state, const PriorityState& priorities, const Graph& g,
    const std::vector<QuadraticProblem>& problems, const StepSchedule& schedule,
    const Box& box, GradientAt gradient_at) {
  StepOutputs out = algorithm_step_full(state, priorities, g, problems,
                                        schedule, box, gradient_at);
  return {std::move(out.state), std::move(out.priorities)};
}

}  // namespace dmopt
