#include "dmopt/pareto.hpp"

#include <ostream>

#include "dmopt/error.hpp"
#include "dmopt/runner.hpp"
#include "dmopt/trace.hpp"

namespace dmopt {

std::vector<SweepPoint> sweep(const RunConfig& base,
                              const std::vector<Eigen::MatrixXd>& w0_list) {
  std::vector<SweepPoint> points;
  points.reserve(w0_list.size());
  const std::vector<QuadraticProblem> problems = resolve_problems(base);

  for (std::size_t idx = 0; idx < w0_list.size(); ++idx) {
    SweepPoint pt;
    pt.run_id = static_cast<int>(idx);
    pt.w0 = w0_list[idx];
    try {
      RunConfig cfg = base;
      cfg.priorities_random = false;
      cfg.priorities_table = w0_list[idx];
      Trace trace = run_trace(cfg);

      pt.wbar = trace.wbar;
      const Eigen::VectorXd& y_final = trace.records.back().y;
      pt.f_values.resize(cfg.m);
      for (int i = 0; i < cfg.m; ++i) {
        pt.f_values(i) = eval_and_grad(problems[i], y_final).value;
      }
      pt.weighted_value = pt.wbar.dot(pt.f_values);
      pt.oracle_f_star = trace.f_star;
      pt.relative_gap = std::abs(pt.weighted_value - pt.oracle_f_star) /
                        std::abs(pt.oracle_f_star);
    } catch (const Error& e) {
      pt.error = e.what();
    }
    points.push_back(std::move(pt));
  }
  return points;
}

std::vector<Eigen::VectorXd> pareto_filter(
    const std::vector<Eigen::VectorXd>& points, double eps) {
  if (points.empty()) return {};
  const auto dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) {
      fail(ErrorKind::kShape, "objective vectors must have equal length");
    }
  }
  auto dominates = [eps](const Eigen::VectorXd& q, const Eigen::VectorXd& p) {
    bool strict = false;
    for (Eigen::Index i = 0; i < q.size(); ++i) {
      if (q(i) > p(i) + eps) return false;
      if (q(i) < p(i) - eps) strict = true;
    }
    return strict;
  };
  std::vector<Eigen::VectorXd> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      dominated = j != i && dominates(points[j], points[i]);
    }
    if (!dominated) kept.push_back(points[i]);
  }
  return kept;
}

std::vector<Eigen::MatrixXd> default_sweep_grid(int points) {
  if (points < 1) fail(ErrorKind::kOutOfRange, "sweep needs at least a point");
  std::vector<Eigen::MatrixXd> grid;
  grid.reserve(points);
  const double hi = 0.95, lo = 0.05;
  for (int i = 0; i < points; ++i) {
    const double t =
        points == 1 ? 0.5 : hi - (hi - lo) * i / static_cast<double>(points - 1);
    Eigen::MatrixXd w0(2, 2);
    w0 << t, 1.0 - t, t, 1.0 - t;
    grid.push_back(std::move(w0));
  }
  return grid;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& points) {
  const int m = points.empty() ? 0 : static_cast<int>(points.front().wbar.size());
  os << "run_id";
  for (int i = 1; i <= m; ++i) os << ",wbar_" << i;
  for (int i = 1; i <= m; ++i) os << ",f_" << i;
  os << ",weighted_value,oracle_f_star,relative_gap\n";
  for (const auto& pt : points) {
    if (!pt.error.empty()) continue;  // reported by the caller, not silently dropped
    os << pt.run_id;
    for (int i = 0; i < m; ++i) os << ',' << format_g17(pt.wbar(i));
    for (int i = 0; i < m; ++i) os << ',' << format_g17(pt.f_values(i));
    os << ',' << format_g17(pt.weighted_value) << ','
       << format_g17(pt.oracle_f_star) << ',' << format_g17(pt.relative_gap)
       << '\n';
  }
}

}  // namespace dmopt
