#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dmopt/config.hpp"

namespace dmopt {

/// One sweep run: initial priorities in, attained objective vector out.
struct SweepPoint {
  int run_id = 0;
  Eigen::MatrixXd w0;
  Eigen::VectorXd wbar;
  Eigen::VectorXd f_values;      // f_i at the converged average iterate
  double weighted_value = 0.0;   // sum_i wbar_i f_i
  double oracle_f_star = 0.0;
  double relative_gap = 0.0;
  std::string error;             // non-empty if this run failed
};

/// Runs the full algorithm once per initial priority table, everything else
/// (problems, graph, seed, initial iterates) held identical, so objective
/// differences are attributable to priorities alone. Failed runs carry their
/// error; they are never silently dropped. Points come back in input order.
std::vector<SweepPoint> sweep(const RunConfig& base,
                              const std::vector<Eigen::MatrixXd>& w0_list);

/// Non-dominated subset, stable order: a point is dropped iff some other
/// point is no worse in every objective (up to eps) and strictly better in
/// one. All vectors must have equal length.
std::vector<Eigen::VectorXd> pareto_filter(
    const std::vector<Eigen::VectorXd>& points, double eps = 0.0);

/// Default two-agent sweep grid: both agents start at (t, 1-t) for t on an
/// evenly spaced descending grid in [0.05, 0.95], so the consensus weights
/// span the simplex edge while staying away from the degenerate corners.
std::vector<Eigen::MatrixXd> default_sweep_grid(int points = 11);

/// Columns: run_id, wbar_1..wbar_m, f_1..f_m, weighted_value, oracle_f_star,
/// relative_gap.
void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& points);

}  // namespace dmopt
