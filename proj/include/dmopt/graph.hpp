#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace dmopt {

/// Undirected communication topology over m agents, with the derived
/// matrices the update laws need. Agents are labelled 1..m at the interface
/// (edge lists, configs); all matrices and indices are 0-based internally.
/// Immutable after construction; safe to share across concurrent runs.
struct Graph {
  int m = 0;
  std::vector<std::pair<int, int>> edges;  // normalized (i < j), 1-based
  Eigen::MatrixXd adjacency;               // H: symmetric 0/1, zero diagonal
  Eigen::VectorXi degree;
  Eigen::MatrixXd laplacian;               // degree matrix minus adjacency
  int max_degree = 0;
  Eigen::MatrixXd q_matrix;                // H + I

  bool has_edge(int i, int j) const {      // 0-based
    return adjacency(i, j) != 0.0;
  }
};

/// Builds and validates the topology. Rejects self-loops, endpoints outside
/// [1..m], and disconnected graphs (connectivity is checked by breadth-first
/// search, which is exact and cheap at these sizes).
Graph build_graph(int m, std::vector<std::pair<int, int>> edges);

Graph complete_graph(int m);
Graph path_graph(int m);

}  // namespace dmopt
