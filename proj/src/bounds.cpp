#include "dmopt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "dmopt/error.hpp"
#include "dmopt/mixing.hpp"

namespace dmopt {

BoundParams make_bound_params(int m, double eta, double M, double L,
                              double alpha0, double epsilon) {
  if (M < 0.0 || L < 0.0) fail(ErrorKind::kDomain, "M and L must be >= 0");
  if (!(alpha0 > 0.0) || !(epsilon > 0.0)) {
    fail(ErrorKind::kDomain, "alpha0 and epsilon must be positive");
  }
  const GeometricParams geom = geometric_params(eta, m);
  BoundParams p;
  p.m = m;
  p.eta = eta;
  p.B0 = geom.B0;
  p.C = geom.C;
  p.beta = geom.beta;
  p.M = M;
  p.L = L;
  p.alpha0 = alpha0;
  p.epsilon = epsilon;
  p.K = 1;
  while (alpha0 / static_cast<double>(p.K) > epsilon) {
    if (++p.K > 100000000L) {
      fail(ErrorKind::kDomain, "epsilon is too small for the step schedule");
    }
  }
  p.omega_max = 1.0 - eta;
  return p;
}

namespace {

double alpha_at(const BoundParams& p, long k) {
  return p.alpha0 / static_cast<double>(k);
}

// Per-step factor inside the window sum of the optimality bound.
double window_bracket(const BoundParams& p, long r, double beta_r1,
                      double beta_rK) {
  const double ar_l = alpha_at(p, r) * p.L;
  return ar_l + 4.0 * p.m * p.C * p.M * beta_r1 +
         8.0 * p.m * p.C * p.L * p.alpha0 *
             ((beta_rK + p.epsilon) / (1.0 - p.beta)) +
         8.0 * alpha_at(p, r - 1) * p.L;
}

}  // namespace

double disagreement_bound(long k, const BoundParams& p) {
  if (k < p.K + 3) {
    fail(ErrorKind::kDomain,
         "disagreement bound holds from k = K + 3 = " + std::to_string(p.K + 3) +
             ", got k = " + std::to_string(k));
  }
  const double geom_tail =
      4.0 * p.m * p.C * p.L * p.alpha0 / (1.0 - p.beta);
  return 2.0 * p.m * p.C * p.M * std::pow(p.beta, double(k - 1)) +
         geom_tail * std::pow(p.beta, double(k - p.K)) +
         4.0 * alpha_at(p, k - 1) * p.L + geom_tail * p.epsilon;
}

double optimality_bound(long k, long s, const Graph& g,
                        const Eigen::VectorXd& dist_sq_at_s,
                        const BoundParams& p) {
  if (s < p.K + 3) {
    fail(ErrorKind::kDomain,
         "optimality bound window must start at s >= K + 3 = " +
             std::to_string(p.K + 3) + ", got s = " + std::to_string(s));
  }
  if (k < s) fail(ErrorKind::kDomain, "need k >= s");
  if (g.m != p.m || dist_sq_at_s.size() != p.m) {
    fail(ErrorKind::kShape, "graph, params and distances disagree on m");
  }

  const Eigen::VectorXd q_col = g.q_matrix.colwise().sum().transpose();
  const double q_total = g.q_matrix.sum();

  double bound =
      std::pow(p.omega_max, double(k + 1)) * q_col.dot(dist_sq_at_s);
  for (long r = s; r <= k; ++r) {
    const double beta_r1 = std::pow(p.beta, double(r - 1));
    const double beta_rK = std::pow(p.beta, double(r - p.K));
    bound += q_total * std::pow(p.omega_max, double(k + 1 - r)) *
             alpha_at(p, r) * p.L * window_bracket(p, r, beta_r1, beta_rK);
  }
  return bound;
}

std::vector<double> optimality_bound_series(const std::vector<long>& ks, long s,
                                            const Graph& g,
                                            const Eigen::VectorXd& dist_sq_at_s,
                                            const BoundParams& p) {
  for (std::size_t i = 1; i < ks.size(); ++i) {
    if (ks[i] <= ks[i - 1]) fail(ErrorKind::kDomain, "ks must be increasing");
  }
  if (!ks.empty() && ks.front() < s) fail(ErrorKind::kDomain, "need k >= s");
  if (s < p.K + 3) {
    fail(ErrorKind::kDomain, "optimality bound window must start at s >= K + 3");
  }
  if (g.m != p.m || dist_sq_at_s.size() != p.m) {
    fail(ErrorKind::kShape, "graph, params and distances disagree on m");
  }

  const Eigen::VectorXd q_col = g.q_matrix.colwise().sum().transpose();
  const double q_total = g.q_matrix.sum();
  const double d0 = q_col.dot(dist_sq_at_s);

  std::vector<double> out;
  out.reserve(ks.size());
  // One pass over the window: with S(k) = sum_{r=s}^{k} w^(k+1-r) g(r) the
  // geometric weights give S(k) = w * (S(k-1) + g(k)). Powers of beta are
  // tracked multiplicatively in the direction that underflows harmlessly.
  double running = 0.0;
  double beta_r1 = std::pow(p.beta, double(s - 1));
  double beta_rK = std::pow(p.beta, double(s - p.K));
  std::size_t next = 0;
  for (long r = s; r <= (ks.empty() ? s - 1 : ks.back()); ++r) {
    const double g_r =
        q_total * alpha_at(p, r) * p.L * window_bracket(p, r, beta_r1, beta_rK);
    running = p.omega_max * (running + g_r);
    beta_r1 *= p.beta;
    beta_rK *= p.beta;
    while (next < ks.size() && ks[next] == r) {
      out.push_back(std::pow(p.omega_max, double(r + 1)) * d0 + running);
      ++next;
    }
  }
  return out;
}

BoundParams bound_params_from_trace(const Trace& trace) {
  return make_bound_params(static_cast<int>(trace.wbar.size()), trace.eta,
                           trace.M, trace.L, trace.alpha0, trace.epsilon);
}

void write_bounds_csv(std::ostream& os, const Trace& trace, const Graph& g) {
  os << "k,disagreement,disagreement_bound,sum_sq_dist_to_opt,optimality_bound\n";
  if (trace.dist_sq_at_s.size() == 0) return;  // run ended before the window

  const BoundParams p = bound_params_from_trace(trace);
  std::vector<long> eval_ks;
  std::vector<const TraceRecord*> rows;
  for (const auto& rec : trace.records) {
    if (rec.k >= trace.s + 1) {
      eval_ks.push_back(rec.k - 1);  // bounds the iterates at rec.k
      rows.push_back(&rec);
    }
  }
  const std::vector<double> opt =
      optimality_bound_series(eval_ks, trace.s, g, trace.dist_sq_at_s, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& rec = *rows[i];
    os << rec.k << ',' << format_g17(rec.disagreement) << ','
       << format_g17(disagreement_bound(rec.k, p)) << ','
       << format_g17(rec.sum_sq_dist_to_opt) << ',' << format_g17(opt[i])
       << '\n';
  }
}

}  // namespace dmopt
