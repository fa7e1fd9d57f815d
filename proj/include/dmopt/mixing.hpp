#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dmopt/consensus.hpp"
#include "dmopt/graph.hpp"

namespace dmopt {

/// Per-iteration information weight matrix. Row i holds the weights agent i
/// applies to agents' iterates ("agent-major"): a(i, j) is the weight agent
/// i assigns to data from agent j. Each row sums to 1; column sums need not
/// (the matrix is stochastic, not doubly stochastic). Entries vanish exactly
/// on non-edges off the diagonal.
struct MixingMatrix {
  Eigen::MatrixXd a;
};

/// Builds the mixing matrix from current priorities: a(i, j) = w_i(j) for
/// neighbors j, zero for non-neighbors, and agent i's own entry soaks up the
/// priority mass of its non-neighbors so the row still sums to 1.
MixingMatrix build_mixing_matrix(const PriorityState& w, const Graph& g);

/// Ordered product of mixing matrices. `phi` maps iterates at step s to
/// step k: newest factor on the left.
struct TransitionProduct {
  Eigen::MatrixXd phi;
  int k = 0;
  int s = 0;
};

/// `mats` in chronological order (oldest first); the result multiplies the
/// newest matrix on the left. Row stochasticity is preserved under products.
TransitionProduct transition_product(const std::vector<MixingMatrix>& mats);

/// Constants of the geometric decay of transition products toward their
/// rank-one limit: with eta the smallest initial priority and B0 = m - 1,
///   beta = (1 - eta^B0)^(1/B0),  C = 2 (1 + eta^-B0) / (1 - eta^B0),
/// and the entrywise distance to the limit is at most C beta^(k-s).
struct GeometricParams {
  double C = 0.0;
  double beta = 0.0;
  int B0 = 0;
  double eta = 0.0;
};

GeometricParams geometric_params(double eta, int m);
GeometricParams geometric_params(const PriorityState& w0, int m);

}  // namespace dmopt
