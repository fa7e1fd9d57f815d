#include <doctest.h>

#include "dmopt/error.hpp"
#include "dmopt/graph.hpp"
#include "test_util.hpp"

using namespace dmopt;

TEST_CASE("path graph Laplacian and degrees") {
  Graph g = build_graph(3, {{1, 2}, {2, 3}});
  Eigen::MatrixXd expected(3, 3);
  expected << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  CHECK(g.laplacian == expected);
  CHECK(g.max_degree == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
}

TEST_CASE("single edge pair") {
  Graph g = build_graph(2, {{1, 2}});
  Eigen::MatrixXd expected(2, 2);
  expected << 1, -1, -1, 1;
  CHECK(g.laplacian == expected);
  CHECK(g.max_degree == 1);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_WITH_AS(build_graph(3, {{1, 2}}), doctest::Contains("disconnected"),
                       Error);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}, {1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{1, 4}, {1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(build_graph(0, {}), Error);

  try {
    build_graph(3, {{2, 2}, {1, 2}, {2, 3}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidEdge);
  }
  try {
    build_graph(3, {{1, 2}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDisconnected);
  }
}

TEST_CASE("duplicate and reversed edges collapse") {
  Graph g = build_graph(2, {{1, 2}, {2, 1}, {1, 2}});
  CHECK(g.edges.size() == 1);
  CHECK(g.q_matrix.sum() == doctest::Approx(4.0));  // m + 2|E|
}

TEST_CASE("single agent graph is connected") {
  Graph g = build_graph(1, {});
  CHECK(g.m == 1);
  CHECK(g.max_degree == 0);
  CHECK(g.laplacian(0, 0) == 0.0);
}

TEST_CASE("structural invariants on random graphs") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int m = 2 + static_cast<int>(seed % 9);
    Graph g = test::random_connected_graph(seed, m);

    CHECK(g.adjacency == g.adjacency.transpose().eval());
    CHECK(g.adjacency.diagonal().isZero(0.0));
    // Rows of the Laplacian sum to zero exactly (integer arithmetic).
    CHECK((g.laplacian * Eigen::VectorXd::Ones(m)).isZero(0.0));
    CHECK(g.q_matrix.sum() == doctest::Approx(m + 2.0 * g.edges.size()));
    CHECK(g.max_degree == g.degree.maxCoeff());
  }
}

TEST_CASE("builders") {
  CHECK(complete_graph(4).edges.size() == 6);
  CHECK(path_graph(5).edges.size() == 4);
  CHECK(complete_graph(4).max_degree == 3);
}
