#include "dmopt/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "dmopt/error.hpp"

namespace dmopt {

namespace {

void check_connected(const Graph& g) {
  std::vector<char> seen(g.m, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v = 0; v < g.m; ++v) {
      if (!seen[v] && g.adjacency(u, v) != 0.0) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  if (reached != g.m) {
    fail(ErrorKind::kDisconnected,
         "graph is disconnected: reached " + std::to_string(reached) + " of " +
             std::to_string(g.m) + " agents");
  }
}

}  // namespace

Graph build_graph(int m, std::vector<std::pair<int, int>> edges) {
  if (m < 1) fail(ErrorKind::kOutOfRange, "agent count must be positive");

  for (auto& [i, j] : edges) {
    if (i < 1 || i > m || j < 1 || j > m) {
      fail(ErrorKind::kOutOfRange, "edge endpoint out of range: (" +
                                       std::to_string(i) + "," +
                                       std::to_string(j) + ") with m=" +
                                       std::to_string(m));
    }
    if (i == j) {
      fail(ErrorKind::kInvalidEdge, "self-loop on agent " + std::to_string(i));
    }
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.m = m;
  g.edges = std::move(edges);
  g.adjacency = Eigen::MatrixXd::Zero(m, m);
  for (const auto& [i, j] : g.edges) {
    g.adjacency(i - 1, j - 1) = 1.0;
    g.adjacency(j - 1, i - 1) = 1.0;
  }
  g.degree = g.adjacency.rowwise().sum().cast<int>();
  g.max_degree = g.m > 0 ? g.degree.maxCoeff() : 0;
  g.laplacian = g.degree.cast<double>().asDiagonal().toDenseMatrix() - g.adjacency;
  g.q_matrix = g.adjacency + Eigen::MatrixXd::Identity(m, m);

  check_connected(g);
  return g;
}

Graph complete_graph(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) edges.emplace_back(i, j);
  return build_graph(m, std::move(edges));
}

Graph path_graph(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < m; ++i) edges.emplace_back(i, i + 1);
  return build_graph(m, std::move(edges));
}

}  // namespace dmopt
