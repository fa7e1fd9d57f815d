#include "dmopt/mixing.hpp"

#include <cmath>
#include <string>

#include "dmopt/error.hpp"

namespace dmopt {

MixingMatrix build_mixing_matrix(const PriorityState& w, const Graph& g) {
  const int m = g.m;
  if (w.w.rows() != m || w.w.cols() != m) {
    fail(ErrorKind::kShape, "priority table does not match agent count");
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    // Neighbors keep agent i's priority for them; the mass i assigned to
    // agents it cannot hear folds into its own weight, keeping the row a
    // probability vector.
    double self = w.w(i, i);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      if (g.has_edge(i, j)) {
        a(i, j) = w.w(i, j);
      } else {
        self += w.w(i, j);
      }
    }
    a(i, i) = self;
  }
  return MixingMatrix{std::move(a)};
}

TransitionProduct transition_product(const std::vector<MixingMatrix>& mats) {
  if (mats.empty()) {
    fail(ErrorKind::kShape, "transition product of an empty list");
  }
  const auto rows = mats.front().a.rows();
  for (const auto& mat : mats) {
    if (mat.a.rows() != rows || mat.a.cols() != rows) {
      fail(ErrorKind::kShape, "transition product factors must all be m x m");
    }
  }
  Eigen::MatrixXd phi = mats.front().a;
  for (std::size_t t = 1; t < mats.size(); ++t) {
    phi = mats[t].a * phi;  // newest factor on the left
  }
  return TransitionProduct{std::move(phi), static_cast<int>(mats.size()) - 1,
                           0};
}

GeometricParams geometric_params(double eta, int m) {
  if (m < 1) fail(ErrorKind::kOutOfRange, "agent count must be positive");
  GeometricParams out;
  out.eta = eta;
  out.B0 = m - 1;
  if (m == 1) {
    // Single agent: the product is the 1x1 identity forever (and the lone
    // priority entry is exactly 1); the decay constants collapse.
    if (eta <= 0.0 || eta > 1.0) {
      fail(ErrorKind::kDomain, "priority entries must lie in (0, 1]");
    }
    out.beta = 0.0;
    out.C = 0.0;
    return out;
  }
  if (!(eta > 0.0 && eta < 1.0)) {
    fail(ErrorKind::kDomain,
         "smallest initial priority must lie strictly inside (0, 1), got " +
             std::to_string(eta));
  }
  const double eta_pow = std::pow(eta, out.B0);
  out.beta = std::pow(1.0 - eta_pow, 1.0 / out.B0);
  out.C = 2.0 * (1.0 + std::pow(eta, -out.B0)) / (1.0 - eta_pow);
  return out;
}

GeometricParams geometric_params(const PriorityState& w0, int m) {
  if (w0.w.rows() != m) {
    fail(ErrorKind::kShape, "priority table does not match agent count");
  }
  return geometric_params(w0.w.minCoeff(), m);
}

}  // namespace dmopt
