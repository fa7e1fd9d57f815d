#include "dmopt/runner.hpp"

#include <chrono>

#include "dmopt/bounds.hpp"
#include "dmopt/error.hpp"
#include "dmopt/mixing.hpp"
#include "dmopt/optimizer.hpp"

namespace dmopt {

Trace run_trace(const RunConfig& cfg, const StepObserver& observer) {
  const auto t_start = std::chrono::steady_clock::now();

  const Graph g = resolve_graph(cfg);
  const double c = resolve_gain(cfg, g);
  const Eigen::MatrixXd w0 = resolve_priorities(cfg);
  const Eigen::MatrixXd x0 = resolve_initial_x(cfg);
  const std::vector<QuadraticProblem> problems = resolve_problems(cfg);
  const StepSchedule schedule{cfg.alpha0};

  PriorityState priorities = make_priority_state(w0, c);
  SwarmState state = make_swarm_state(x0, cfg.box);

  Trace trace;
  trace.seed = cfg.seed;
  trace.config_hash = dmopt::config_hash(cfg);
  trace.wbar = average_priorities(priorities);
  const OracleSolution oracle = weighted_optimum(problems, trace.wbar, cfg.box);
  trace.x_star = oracle.x_star;
  trace.f_star = oracle.f_star;
  trace.M = x0.rowwise().norm().sum();
  trace.L = gradient_bound(problems, cfg.box);
  trace.alpha0 = cfg.alpha0;
  trace.eta = w0.minCoeff();
  const GeometricParams geom = geometric_params(priorities, cfg.m);
  trace.C = geom.C;
  trace.beta = geom.beta;
  trace.B0 = geom.B0;
  trace.epsilon = resolve_epsilon(cfg);
  trace.omega_max = 1.0 - trace.eta;
  long K = 1;
  while (cfg.alpha0 / static_cast<double>(K) > trace.epsilon) {
    if (++K > 100000000L) {
      fail(ErrorKind::kDomain, "epsilon is too small for the step schedule");
    }
  }
  trace.K = K;
  trace.s = K + 3;

  auto record = [&](long k, double alpha, const Eigen::MatrixXd& x,
                    const Eigen::MatrixXd& w) {
    TraceRecord rec;
    rec.k = k;
    rec.alpha = alpha;
    rec.y = x.colwise().mean().transpose();
    rec.disagreement = (x.rowwise() - rec.y.transpose()).rowwise().norm().maxCoeff();
    rec.sum_sq_dist_to_opt =
        (x.rowwise() - trace.x_star.transpose()).rowwise().squaredNorm().sum();
    double fy = 0.0;
    for (int i = 0; i < cfg.m; ++i) {
      fy += trace.wbar(i) * eval_and_grad(problems[i], rec.y).value;
    }
    rec.f_of_y = fy;
    rec.min_w_entry = w.minCoeff();
    trace.records.push_back(std::move(rec));
  };

  record(0, 0.0, state.x, priorities.w);

  for (long k = 1; k <= cfg.iterations; ++k) {
    StepOutputs out = algorithm_step_full(state, priorities, g, problems,
                                          schedule, cfg.box, cfg.gradient_at);
    if (k == trace.s) {
      trace.dist_sq_at_s = (out.state.x.rowwise() - trace.x_star.transpose())
                               .rowwise()
                               .squaredNorm();
    }
    if (observer) {
      observer(StepView{k, out.alpha, state.x, out.state.x, out.state.v,
                        out.gradients, out.state.phi_err, out.mixing.a,
                        out.priorities.w});
    }
    state = std::move(out.state);
    priorities = std::move(out.priorities);
    if (k % cfg.record_every == 0 || k == cfg.iterations) {
      record(k, out.alpha, state.x, priorities.w);
    }
  }

  trace.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return trace;
}

}  // namespace dmopt
