#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dmopt {

/// One recorded iteration. `k` is the number of completed steps; `alpha` is
/// the step size used by step k (0 for the initial record).
struct TraceRecord {
  long k = 0;
  double alpha = 0.0;
  double disagreement = 0.0;        // max_i ||x_i - y||
  double sum_sq_dist_to_opt = 0.0;  // sum_i ||x_i - x*||^2
  double f_of_y = 0.0;              // weighted objective at the average
  double min_w_entry = 0.0;         // smallest priority entry
  Eigen::VectorXd y;
};

/// Recorded run: per-iteration records plus the constants needed to evaluate
/// the closed-form rate bounds against the measurements afterwards.
struct Trace {
  std::vector<TraceRecord> records;

  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
  Eigen::VectorXd wbar;          // consensus priorities (mean of the initial)
  Eigen::VectorXd x_star;        // centralized weighted optimum
  double f_star = 0.0;
  double M = 0.0;                // sum_j ||x_j(0)||
  double L = 0.0;                // gradient bound over the box
  double alpha0 = 0.0;
  double eta = 0.0;              // smallest initial priority
  double C = 0.0;                // geometric decay constants
  double beta = 0.0;
  int B0 = 0;
  double epsilon = 0.0;
  long K = 0;                    // first k with alpha_k <= epsilon
  long s = 0;                    // bound window start, K + 3
  double omega_max = 0.0;        // 1 - eta
  Eigen::VectorXd dist_sq_at_s;  // per-agent ||x_j(s) - x*||^2 (may be empty)
  double runtime_seconds = 0.0;
};

/// Formats a double with 17 significant digits (exact round trip).
std::string format_g17(double v);

/// Columns: k, alpha, disagreement, sum_sq_dist_to_opt, f_of_y, min_w_entry.
void write_trace_csv(std::ostream& os, const Trace& trace);

}  // namespace dmopt
