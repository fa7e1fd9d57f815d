#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace dmopt {

/// Axis-aligned box constraint; the scalar bounds broadcast to every
/// coordinate. Must be bounded and non-degenerate.
struct Box {
  double lower = 0.0;
  double upper = 0.0;
};

Box make_box(double lower, double upper);

/// Convex quadratic objective f(x) = x'Qx/2 + r'x + c with Q symmetric
/// positive definite.
struct QuadraticProblem {
  Eigen::MatrixXd q_mat;
  Eigen::VectorXd r_vec;
  double c_scalar = 0.0;
};

/// Deterministic random instance: Q = G'G + 0.1 I with G uniform in [-1, 1]
/// (the shift guarantees positive definiteness), r uniform in [-10, 10], c
/// uniform in [-10, 10]. Same seed, same bits.
QuadraticProblem generate_quadratic(std::uint64_t seed, int n);

struct EvalResult {
  double value = 0.0;
  Eigen::VectorXd grad;
};

EvalResult eval_and_grad(const QuadraticProblem& p, const Eigen::VectorXd& x);

/// Centralized optimum of the weighted sum over the box, for use as the
/// reference solution.
struct OracleSolution {
  Eigen::VectorXd x_star;
  double f_star = 0.0;
};

/// Minimizes sum_i wbar_i f_i over the box. Uses the closed form when the
/// unconstrained optimum is interior; otherwise falls back to projected
/// gradient descent run to a tight residual.
OracleSolution weighted_optimum(const std::vector<QuadraticProblem>& problems,
                                const Eigen::VectorXd& wbar, const Box& box);

/// Upper bound L on the gradient norm over the box:
///   L = max_i ( ||Q_i||_F * b * sqrt(n) + ||r_i|| ),  b = max(|lo|, |hi|).
/// Valid, not tight.
double gradient_bound(const std::vector<QuadraticProblem>& problems,
                      const Box& box);

/// Flat numeric dump (row-major Q, then r, then c per agent) so instances can
/// be compared across implementations. `load_problems` reverses it.
void dump_problems(std::ostream& os,
                   const std::vector<QuadraticProblem>& problems);
std::vector<QuadraticProblem> load_problems(std::istream& is);

}  // namespace dmopt
