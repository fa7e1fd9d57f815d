#include "dmopt/problems.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include <Eigen/Cholesky>

#include "dmopt/error.hpp"
#include "dmopt/rng.hpp"
#include "dmopt/trace.hpp"

namespace dmopt {

Box make_box(double lower, double upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || lower >= upper) {
    fail(ErrorKind::kDomain, "box bounds must be finite with lower < upper");
  }
  return Box{lower, upper};
}

QuadraticProblem generate_quadratic(std::uint64_t seed, int n) {
  if (n < 1) fail(ErrorKind::kOutOfRange, "dimension must be positive");
  SplitMix64 rng(seed);
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.uniform(-1.0, 1.0);

  QuadraticProblem p;
  p.q_mat = g.transpose() * g + 0.1 * Eigen::MatrixXd::Identity(n, n);
  p.r_vec.resize(n);
  for (int i = 0; i < n; ++i) p.r_vec(i) = rng.uniform(-10.0, 10.0);
  p.c_scalar = rng.uniform(-10.0, 10.0);
  return p;
}

EvalResult eval_and_grad(const QuadraticProblem& p, const Eigen::VectorXd& x) {
  if (x.size() != p.q_mat.rows()) {
    fail(ErrorKind::kShape, "point dimension does not match the problem");
  }
  Eigen::VectorXd qx = p.q_mat * x;
  EvalResult out;
  out.value = 0.5 * x.dot(qx) + p.r_vec.dot(x) + p.c_scalar;
  out.grad = qx + p.r_vec;
  return out;
}

namespace {

Eigen::VectorXd clamp_to(const Eigen::VectorXd& x, const Box& box) {
  return x.cwiseMax(box.lower).cwiseMin(box.upper);
}

}  // namespace

OracleSolution weighted_optimum(const std::vector<QuadraticProblem>& problems,
                                const Eigen::VectorXd& wbar, const Box& box) {
  if (problems.empty()) fail(ErrorKind::kShape, "no problems given");
  const auto m = static_cast<Eigen::Index>(problems.size());
  const auto n = problems.front().q_mat.rows();
  if (wbar.size() != m) {
    fail(ErrorKind::kShape, "weight vector does not match the problem count");
  }
  double wsum = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (wbar(i) <= 0.0) fail(ErrorKind::kDomain, "weights must be positive");
    wsum += wbar(i);
  }
  if (std::abs(wsum - 1.0) > 1e-9) {
    fail(ErrorKind::kSimplex, "weights must sum to 1");
  }

  Eigen::MatrixXd q_sum = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd r_sum = Eigen::VectorXd::Zero(n);
  double c_sum = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (problems[i].q_mat.rows() != n || problems[i].r_vec.size() != n) {
      fail(ErrorKind::kShape, "problem dimensions disagree");
    }
    q_sum += wbar(i) * problems[i].q_mat;
    r_sum += wbar(i) * problems[i].r_vec;
    c_sum += wbar(i) * problems[i].c_scalar;
  }

  Eigen::LLT<Eigen::MatrixXd> llt(q_sum);
  if (llt.info() != Eigen::Success) {
    fail(ErrorKind::kDomain, "weighted Hessian is not positive definite");
  }

  Eigen::VectorXd x = llt.solve(-r_sum);
  const bool interior =
      (x.array() >= box.lower).all() && (x.array() <= box.upper).all();
  if (!interior) {
    // Constrained optimum: projected gradient descent with a contraction
    // step, run until the projected point stops moving.
    const double gamma = 1.0 / (q_sum.norm() + 1.0);
    x = clamp_to(x, box);
    for (int it = 0; it < 1000000; ++it) {
      Eigen::VectorXd next = clamp_to(x - gamma * (q_sum * x + r_sum), box);
      const double moved = (next - x).norm();
      x = next;
      if (moved <= 1e-14 * std::max(1.0, x.norm())) break;
    }
  }

  OracleSolution sol;
  sol.x_star = x;
  sol.f_star = 0.5 * x.dot(q_sum * x) + r_sum.dot(x) + c_sum;
  return sol;
}

double gradient_bound(const std::vector<QuadraticProblem>& problems,
                      const Box& box) {
  const double b = std::max(std::abs(box.lower), std::abs(box.upper));
  double bound = 0.0;
  for (const auto& p : problems) {
    const double n = static_cast<double>(p.q_mat.rows());
    bound = std::max(bound,
                     p.q_mat.norm() * b * std::sqrt(n) + p.r_vec.norm());
  }
  return bound;
}

void dump_problems(std::ostream& os,
                   const std::vector<QuadraticProblem>& problems) {
  const auto n = problems.empty() ? 0 : problems.front().q_mat.rows();
  os << problems.size() << ' ' << n << '\n';
  for (const auto& p : problems) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        os << format_g17(p.q_mat(i, j)) << (j + 1 < n ? ' ' : '\n');
      }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      os << format_g17(p.r_vec(i)) << (i + 1 < n ? ' ' : '\n');
    }
    os << format_g17(p.c_scalar) << '\n';
  }
}

std::vector<QuadraticProblem> load_problems(std::istream& is) {
  std::size_t m = 0;
  Eigen::Index n = 0;
  if (!(is >> m >> n) || n < 1) {
    fail(ErrorKind::kParse, "malformed problem dump header");
  }
  std::vector<QuadraticProblem> problems(m);
  for (auto& p : problems) {
    p.q_mat.resize(n, n);
    p.r_vec.resize(n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (!(is >> p.q_mat(i, j)))
          fail(ErrorKind::kParse, "problem dump truncated");
    for (Eigen::Index i = 0; i < n; ++i)
      if (!(is >> p.r_vec(i))) fail(ErrorKind::kParse, "problem dump truncated");
    if (!(is >> p.c_scalar)) fail(ErrorKind::kParse, "problem dump truncated");
    if ((p.q_mat - p.q_mat.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      fail(ErrorKind::kDomain, "loaded matrix is not symmetric");
    }
    if (Eigen::LLT<Eigen::MatrixXd>(p.q_mat).info() != Eigen::Success) {
      fail(ErrorKind::kDomain, "loaded matrix is not positive definite");
    }
  }
  return problems;
}

}  // namespace dmopt
