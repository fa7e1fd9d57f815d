#pragma once

#include <functional>

#include <Eigen/Dense>

#include "dmopt/config.hpp"
#include "dmopt/trace.hpp"

namespace dmopt {

/// Read-only view of one completed iteration, for invariant checks and
/// instrumentation. References stay valid only during the callback.
struct StepView {
  long k;
  double alpha;
  const Eigen::MatrixXd& x_prev;
  const Eigen::MatrixXd& x_next;
  const Eigen::MatrixXd& v;
  const Eigen::MatrixXd& gradients;
  const Eigen::MatrixXd& phi;
  const Eigen::MatrixXd& mixing;      // weights applied this step
  const Eigen::MatrixXd& priorities;  // after this step's averaging
};

using StepObserver = std::function<void(const StepView&)>;

/// Runs `iterations` interlaced steps from the configured initial state and
/// records every `record_every`-th iteration (plus the initial state and the
/// final iterate). A run is strictly sequential; concurrent runs are safe.
/// Throws a divergence error naming the iteration if an iterate goes
/// non-finite.
Trace run_trace(const RunConfig& cfg, const StepObserver& observer = nullptr);

}  // namespace dmopt
