#include <doctest.h>

#include <cmath>

#include "dmopt/error.hpp"
#include "dmopt/mixing.hpp"
#include "test_util.hpp"

using namespace dmopt;

namespace {

Eigen::MatrixXd table1() {
  Eigen::MatrixXd w(3, 3);
  w << 0.3495, 0.3027, 0.3478,  //
      0.2232, 0.3838, 0.3930,   //
      0.6315, 0.2494, 0.1191;
  return w;
}

}  // namespace

TEST_CASE("weights on a path: non-neighbor mass folds into the diagonal") {
  Graph g = path_graph(3);
  MixingMatrix a = build_mixing_matrix(make_priority_state(table1(), 0.4), g);

  // Agent 1 hears only agent 2; its weight for agent 3 moves to itself.
  CHECK(a.a(0, 0) == doctest::Approx(0.6973).epsilon(1e-12));
  CHECK(a.a(0, 1) == doctest::Approx(0.3027).epsilon(1e-12));
  CHECK(a.a(0, 2) == 0.0);
  // Agent 2 hears everyone; its row is its priority vector unchanged.
  CHECK(a.a(1, 0) == 0.2232);
  CHECK(a.a(1, 1) == 0.3838);
  CHECK(a.a(1, 2) == 0.3930);
  // Agent 3 mirrors agent 1.
  CHECK(a.a(2, 0) == 0.0);
  CHECK(a.a(2, 2) == doctest::Approx(0.7506).epsilon(1e-12));
}

TEST_CASE("complete graph leaves priorities untouched") {
  Graph g = complete_graph(3);
  Eigen::MatrixXd w = table1();
  MixingMatrix a = build_mixing_matrix(make_priority_state(w, 0.3), g);
  CHECK(a.a == w);
}

TEST_CASE("matrix expression equivalence") {
  // The same weights written with Hadamard products: keep the masked
  // priorities and put each row's masked-out mass on the diagonal.
  for (std::uint64_t seed = 2; seed <= 9; ++seed) {
    const int m = 2 + static_cast<int>(seed % 6);
    Graph g = test::random_connected_graph(seed, m);
    Eigen::MatrixXd w = test::priorities_with_floor(seed * 7, m, 0.01);
    MixingMatrix a = build_mixing_matrix(make_priority_state(w, 0.1), g);

    Eigen::MatrixXd q_tilde =
        Eigen::MatrixXd::Ones(m, m) - g.q_matrix;  // 1 - q everywhere
    Eigen::MatrixXd expr = g.q_matrix.cwiseProduct(w);
    expr += (w.cwiseProduct(q_tilde) * Eigen::VectorXd::Ones(m)).asDiagonal();
    CHECK((a.a - expr).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("zero pattern and row stochasticity") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int m = 2 + static_cast<int>(seed % 8);
    Graph g = test::random_connected_graph(seed ^ 0x55, m);
    Eigen::MatrixXd w = test::priorities_with_floor(seed, m, 0.005);
    MixingMatrix a = build_mixing_matrix(make_priority_state(w, 0.05), g);
    for (int i = 0; i < m; ++i) {
      CHECK(std::abs(a.a.row(i).sum() - 1.0) < 1e-12);
      for (int j = 0; j < m; ++j) {
        if (i != j && !g.has_edge(i, j)) CHECK(a.a(i, j) == 0.0);
      }
    }
  }
}

TEST_CASE("structurally nonzero weights never drop below the initial minimum") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int m = 3 + static_cast<int>(seed % 5);
    Graph g = test::random_connected_graph(seed * 13, m);
    PriorityState state = make_priority_state(
        test::priorities_with_floor(seed, m, 0.01), default_gain(g));
    const double eta = state.w.minCoeff();
    for (int k = 0; k < 50; ++k) {
      state = priority_step(state, g);
      MixingMatrix a = build_mixing_matrix(state, g);
      for (int i = 0; i < m; ++i) {
        CHECK(a.a(i, i) >= eta - 1e-12);
        for (int j = 0; j < m; ++j) {
          if (g.has_edge(i, j)) CHECK(a.a(i, j) >= eta - 1e-12);
        }
      }
    }
  }
}

TEST_CASE("transition product basics") {
  Graph g = complete_graph(3);
  Eigen::MatrixXd uniform = Eigen::MatrixXd::Constant(3, 3, 1.0 / 3.0);
  MixingMatrix a = build_mixing_matrix(make_priority_state(uniform, 0.1), g);

  TransitionProduct single = transition_product({a});
  CHECK(single.phi == a.a);

  // Uniform averaging is idempotent: one factor already gives 1/m entries.
  TransitionProduct many = transition_product({a, a, a, a});
  CHECK((many.phi.array() - 1.0 / 3.0).abs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(transition_product({}), Error);
}

TEST_CASE("two-factor product matches hand multiplication") {
  MixingMatrix a1{(Eigen::MatrixXd(2, 2) << 0.7, 0.3, 0.4, 0.6).finished()};
  MixingMatrix a2{(Eigen::MatrixXd(2, 2) << 0.9, 0.1, 0.2, 0.8).finished()};
  // Chronological order (a1 first), newest factor on the left: a2 * a1.
  TransitionProduct phi = transition_product({a1, a2});
  Eigen::MatrixXd expected(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double acc = 0.0;
      for (int l = 0; l < 2; ++l) acc += a2.a(i, l) * a1.a(l, j);
      expected(i, j) = acc;
    }
  }
  CHECK((phi.phi - expected).cwiseAbs().maxCoeff() < 1e-16);
}

TEST_CASE("products stay row stochastic with entries in [0, 1]") {
  Graph g = test::random_connected_graph(5, 5);
  PriorityState state = make_priority_state(
      test::priorities_with_floor(29, 5, 0.02), default_gain(g));
  std::vector<MixingMatrix> factors;
  for (int k = 0; k < 40; ++k) {
    state = priority_step(state, g);
    factors.push_back(build_mixing_matrix(state, g));
  }
  TransitionProduct phi = transition_product(factors);
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(phi.phi.row(i).sum() - 1.0) < 1e-12);
  }
  CHECK(phi.phi.minCoeff() >= 0.0);
  CHECK(phi.phi.maxCoeff() <= 1.0 + 1e-15);
}

TEST_CASE("geometric decay constants") {
  GeometricParams p = geometric_params(0.5, 2);
  CHECK(p.B0 == 1);
  CHECK(p.beta == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p.C == doctest::Approx(12.0).epsilon(1e-14));

  p = geometric_params(0.1191, 3);
  CHECK(p.B0 == 2);
  CHECK(p.beta == doctest::Approx(0.992882263916523).epsilon(1e-12));
  CHECK(p.C == doctest::Approx(145.0534519704832).epsilon(1e-12));

  // eta close to 1: the rate collapses but the constant blows up, since the
  // denominator 1 - eta^B0 vanishes.
  p = geometric_params(0.99, 2);
  CHECK(p.beta == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(p.C == doctest::Approx(402.0202020202017).epsilon(1e-12));

  CHECK_THROWS_AS(geometric_params(0.0, 3), Error);
  CHECK_THROWS_AS(geometric_params(1.0, 3), Error);
  CHECK_THROWS_AS(geometric_params(-0.1, 3), Error);
}

TEST_CASE("transition product spread is bounded by the geometric decay") {
  Graph g = path_graph(4);
  Eigen::MatrixXd w0 = test::priorities_with_floor(77, 4, 0.12);
  PriorityState state = make_priority_state(w0, default_gain(g));
  GeometricParams p = geometric_params(state, 4);

  Eigen::MatrixXd phi;
  for (int k = 0; k <= 120; ++k) {
    if (k > 0) state = priority_step(state, g);
    MixingMatrix a = build_mixing_matrix(state, g);
    phi = k == 0 ? a.a : Eigen::MatrixXd(a.a * phi);
    const double spread =
        (phi.colwise().maxCoeff() - phi.colwise().minCoeff()).maxCoeff();
    CHECK(spread <= p.C * std::pow(p.beta, k));
  }
}
