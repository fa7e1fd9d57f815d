#include "dmopt/consensus.hpp"

#include <cmath>
#include <string>

#include "dmopt/error.hpp"
#include "dmopt/rng.hpp"

namespace dmopt {

namespace {

void validate_rows(const Eigen::MatrixXd& w) {
  const int m = static_cast<int>(w.rows());
  if (w.cols() != m) {
    fail(ErrorKind::kShape, "priority table must be square (one vector per agent)");
  }
  for (int i = 0; i < m; ++i) {
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
      const double wij = w(i, j);
      if (!std::isfinite(wij) || wij <= 0.0 || (wij >= 1.0 && m > 1)) {
        fail(ErrorKind::kSimplex,
             "priority entry for agent " + std::to_string(i + 1) +
                 " must lie strictly inside (0, 1)");
      }
      sum += wij;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      fail(ErrorKind::kSimplex, "priorities of agent " + std::to_string(i + 1) +
                                    " sum to " + std::to_string(sum) +
                                    ", expected 1");
    }
  }
}

void validate_gain(double c, const Graph& g) {
  const bool in_range =
      c > 0.0 && (g.max_degree == 0 || c < 1.0 / g.max_degree);
  if (!in_range) {
    fail(ErrorKind::kGainRange,
         "consensus gain " + std::to_string(c) +
             " outside (0, 1/max_degree) with max_degree " +
             std::to_string(g.max_degree));
  }
}

}  // namespace

PriorityState make_priority_state(Eigen::MatrixXd w, double c) {
  validate_rows(w);
  return PriorityState{std::move(w), c};
}

double default_gain(const Graph& g) {
  return g.max_degree > 0 ? 0.9 / g.max_degree : 0.5;
}

PriorityState priority_step(const PriorityState& state, const Graph& g) {
  if (state.w.rows() != g.m) {
    fail(ErrorKind::kShape, "priority table does not match agent count");
  }
  validate_gain(state.c, g);
  // Network form of the per-agent update: agents sit along the mixed axis,
  // so the averaging matrix multiplies the stacked vectors from the left.
  Eigen::MatrixXd p =
      Eigen::MatrixXd::Identity(g.m, g.m) - state.c * g.laplacian;
  return PriorityState{p * state.w, state.c};
}

Eigen::VectorXd average_priorities(const PriorityState& w0) {
  validate_rows(w0.w);
  return w0.w.colwise().mean().transpose();
}

Eigen::MatrixXd random_priorities(std::uint64_t seed, int m,
                                  double min_weight) {
  if (m < 1) fail(ErrorKind::kOutOfRange, "agent count must be positive");
  if (min_weight <= 0.0 || min_weight >= 1.0) {
    fail(ErrorKind::kDomain, "min_weight must be in (0, 1)");
  }
  SplitMix64 rng(seed);
  Eigen::MatrixXd w(m, m);
  for (int i = 0; i < m; ++i) {
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
      w(i, j) = std::max(rng.uniform01(), min_weight);
      sum += w(i, j);
    }
    w.row(i) /= sum;
  }
  return w;
}

}  // namespace dmopt
