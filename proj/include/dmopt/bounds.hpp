#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "dmopt/graph.hpp"
#include "dmopt/trace.hpp"

namespace dmopt {

/// Inputs of the closed-form convergence-rate bounds.
struct BoundParams {
  int m = 0;
  double eta = 0.0;       // smallest initial priority
  int B0 = 0;             // m - 1
  double C = 0.0;         // geometric decay constants for eta, B0
  double beta = 0.0;
  double M = 0.0;         // bound on sum_j ||x_j(0)||
  double L = 0.0;         // gradient bound
  double alpha0 = 0.0;
  double epsilon = 0.0;   // step-size threshold defining the window
  long K = 0;             // first k with alpha_k <= epsilon
  double omega_max = 0.0; // 1 - eta, the largest possible mixing weight
};

/// Fills in the derived fields (B0, C, beta, K, omega_max).
BoundParams make_bound_params(int m, double eta, double M, double L,
                              double alpha0, double epsilon);

/// Closed-form bound on the disagreement max_i ||x_i(k) - y(k)||, valid for
/// k >= K + 3:
///   2 m C M beta^(k-1) + 4 m C L alpha0 beta^(k-K)/(1-beta)
///   + 4 alpha_{k-1} L + 4 m C L alpha0 epsilon/(1-beta).
double disagreement_bound(long k, const BoundParams& p);

/// Closed-form bound on sum_i ||x_i(k+1) - x*||^2 over the window starting
/// at s >= K + 3, given the per-agent squared distances at s. Entries of
/// Q = H + I weight the sums.
double optimality_bound(long k, long s, const Graph& g,
                        const Eigen::VectorXd& dist_sq_at_s,
                        const BoundParams& p);

/// optimality_bound evaluated at many k in one pass (the direct form is
/// quadratic in the horizon; this uses the geometric recurrence and
/// precomputed power tables, and matches the direct form to rounding).
std::vector<double> optimality_bound_series(const std::vector<long>& ks, long s,
                                            const Graph& g,
                                            const Eigen::VectorXd& dist_sq_at_s,
                                            const BoundParams& p);

BoundParams bound_params_from_trace(const Trace& trace);

/// Bound-versus-measurement CSV aligned with trace records. Columns:
/// k, disagreement, disagreement_bound, sum_sq_dist_to_opt, optimality_bound.
/// The optimality column at row k bounds the iterates at k, i.e. it is the
/// window bound evaluated at k - 1; rows start at the first recorded
/// k >= s + 1.
void write_bounds_csv(std::ostream& os, const Trace& trace, const Graph& g);

}  // namespace dmopt
