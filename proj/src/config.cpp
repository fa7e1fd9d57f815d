#include "dmopt/config.hpp"

#include <cmath>
#include <set>
#include <string>

#include <json.hpp>

#include "dmopt/consensus.hpp"
#include "dmopt/error.hpp"
#include "dmopt/rng.hpp"
#include "dmopt/trace.hpp"

namespace dmopt {

namespace {

using json = nlohmann::ordered_json;

// Substream tags for the independent random draws of a run.
constexpr std::uint64_t kProblemTag = 1000;  // + agent index
constexpr std::uint64_t kPriorityTag = 2000;
constexpr std::uint64_t kInitialXTag = 3000;

Eigen::MatrixXd parse_table(const json& value, const char* field) {
  if (!value.is_array() || value.empty()) {
    fail(ErrorKind::kParse, std::string(field) + " must be a non-empty array of rows");
  }
  const auto rows = value.size();
  const auto cols = value.front().is_array() ? value.front().size() : 0;
  if (cols == 0) {
    fail(ErrorKind::kParse, std::string(field) + " rows must be arrays of numbers");
  }
  Eigen::MatrixXd table(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = value[i];
    if (!row.is_array() || row.size() != cols) {
      fail(ErrorKind::kParse, std::string(field) + " rows must all have equal length");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (!row[j].is_number()) {
        fail(ErrorKind::kParse, std::string(field) + " entries must be numbers");
      }
      table(i, j) = row[j].get<double>();
    }
  }
  return table;
}

GraphSpec parse_graph_spec(const json& value) {
  GraphSpec spec;
  if (value.is_string()) {
    const auto name = value.get<std::string>();
    if (name == "complete") {
      spec.kind = GraphKind::kComplete;
    } else if (name == "path") {
      spec.kind = GraphKind::kPath;
    } else {
      fail(ErrorKind::kParse, "graph keyword must be \"complete\" or \"path\", got \"" + name + "\"");
    }
    return spec;
  }
  if (!value.is_array()) {
    fail(ErrorKind::kParse, "graph must be a keyword or an edge list");
  }
  spec.kind = GraphKind::kEdges;
  for (const auto& e : value) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      fail(ErrorKind::kParse, "graph edges must be [i, j] agent pairs");
    }
    spec.edge_list.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return spec;
}

void parse_into(RunConfig& cfg, const json& doc, bool require_core) {
  if (!doc.is_object()) fail(ErrorKind::kParse, "config must be a JSON object");

  static const std::set<std::string> known = {
      "m", "n", "graph", "seed", "alpha0", "c", "iterations", "record_every",
      "box", "priorities", "min_weight", "initial_x", "gradient_at",
      "epsilon", "out"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) {
      fail(ErrorKind::kParse, "unknown config field \"" + key + "\"");
    }
  }

  auto require = [&](const char* field) {
    if (!doc.contains(field)) {
      fail(ErrorKind::kParse, std::string("missing required config field \"") + field + "\"");
    }
  };
  if (require_core) {
    for (const char* field : {"m", "n", "graph", "seed", "iterations"}) {
      require(field);
    }
  }

  if (doc.contains("m")) cfg.m = doc["m"].get<int>();
  if (doc.contains("n")) cfg.n = doc["n"].get<int>();
  if (doc.contains("graph")) cfg.graph = parse_graph_spec(doc["graph"]);
  if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("alpha0")) cfg.alpha0 = doc["alpha0"].get<double>();
  if (doc.contains("c")) {
    if (doc["c"].is_string()) {
      if (doc["c"].get<std::string>() != "auto") {
        fail(ErrorKind::kParse, "c must be a number or \"auto\"");
      }
      cfg.c_auto = true;
    } else {
      cfg.c_auto = false;
      cfg.c = doc["c"].get<double>();
    }
  }
  if (doc.contains("iterations")) cfg.iterations = doc["iterations"].get<long>();
  if (doc.contains("record_every")) cfg.record_every = doc["record_every"].get<long>();
  if (doc.contains("box")) {
    const auto& b = doc["box"];
    if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number()) {
      fail(ErrorKind::kParse, "box must be [lower, upper]");
    }
    cfg.box = Box{b[0].get<double>(), b[1].get<double>()};
  }
  if (doc.contains("priorities")) {
    if (doc["priorities"].is_string()) {
      if (doc["priorities"].get<std::string>() != "random") {
        fail(ErrorKind::kParse, "priorities must be \"random\" or an m x m table");
      }
      cfg.priorities_random = true;
      cfg.priorities_table.resize(0, 0);
    } else {
      cfg.priorities_random = false;
      cfg.priorities_table = parse_table(doc["priorities"], "priorities");
    }
  }
  if (doc.contains("min_weight")) cfg.min_weight = doc["min_weight"].get<double>();
  if (doc.contains("initial_x")) {
    if (doc["initial_x"].is_string()) {
      if (doc["initial_x"].get<std::string>() != "random") {
        fail(ErrorKind::kParse, "initial_x must be \"random\" or an m x n table");
      }
      cfg.initial_x_random = true;
      cfg.initial_x_table.resize(0, 0);
    } else {
      cfg.initial_x_random = false;
      cfg.initial_x_table = parse_table(doc["initial_x"], "initial_x");
    }
  }
  if (doc.contains("gradient_at")) {
    const auto at = doc["gradient_at"].get<std::string>();
    if (at == "iterate") {
      cfg.gradient_at = GradientAt::kIterate;
    } else if (at == "mixed") {
      cfg.gradient_at = GradientAt::kMixed;
    } else {
      fail(ErrorKind::kParse, "gradient_at must be \"iterate\" or \"mixed\"");
    }
  }
  if (doc.contains("epsilon")) {
    if (doc["epsilon"].is_string()) {
      if (doc["epsilon"].get<std::string>() != "auto") {
        fail(ErrorKind::kParse, "epsilon must be a number or \"auto\"");
      }
      cfg.epsilon_auto = true;
    } else {
      cfg.epsilon_auto = false;
      cfg.epsilon = doc["epsilon"].get<double>();
    }
  }
  if (doc.contains("out")) cfg.out_dir = doc["out"].get<std::string>();
}

void validate(const RunConfig& cfg) {
  if (cfg.m < 1) fail(ErrorKind::kOutOfRange, "m must be positive");
  if (cfg.n < 1) fail(ErrorKind::kOutOfRange, "n must be positive");
  if (cfg.iterations < 0) fail(ErrorKind::kOutOfRange, "iterations must be >= 0");
  if (cfg.record_every < 1) fail(ErrorKind::kOutOfRange, "record_every must be >= 1");
  if (!(cfg.alpha0 > 0.0) || !std::isfinite(cfg.alpha0)) {
    fail(ErrorKind::kOutOfRange, "alpha0 must be positive");
  }
  make_box(cfg.box.lower, cfg.box.upper);
  if (!cfg.epsilon_auto && !(cfg.epsilon > 0.0)) {
    fail(ErrorKind::kOutOfRange, "epsilon must be positive");
  }

  Graph g = resolve_graph(cfg);  // validates edges and connectivity
  const double c = resolve_gain(cfg, g);
  if (!(c > 0.0) || (g.max_degree > 0 && c >= 1.0 / g.max_degree)) {
    fail(ErrorKind::kGainRange,
         "consensus gain " + std::to_string(c) +
             " outside (0, 1/max_degree) with max_degree " +
             std::to_string(g.max_degree));
  }

  if (cfg.priorities_random) {
    if (cfg.min_weight <= 0.0 || cfg.min_weight * cfg.m >= 1.0) {
      fail(ErrorKind::kOutOfRange, "min_weight must be in (0, 1/m)");
    }
  } else {
    if (cfg.priorities_table.rows() != cfg.m ||
        cfg.priorities_table.cols() != cfg.m) {
      fail(ErrorKind::kShape, "priorities table must be m x m");
    }
    make_priority_state(cfg.priorities_table, c);  // simplex check
  }

  if (!cfg.initial_x_random) {
    if (cfg.initial_x_table.rows() != cfg.m ||
        cfg.initial_x_table.cols() != cfg.n) {
      fail(ErrorKind::kShape, "initial_x table must be m x n");
    }
    if (!cfg.initial_x_table.allFinite() ||
        (cfg.initial_x_table.array() < cfg.box.lower).any() ||
        (cfg.initial_x_table.array() > cfg.box.upper).any()) {
      fail(ErrorKind::kOutOfRange, "initial_x entries must lie inside the box");
    }
  }
}

json table_to_json(const Eigen::MatrixXd& table) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < table.cols(); ++j) row.push_back(table(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

bool RunConfig::operator==(const RunConfig& other) const {
  auto same_table = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
  };
  return m == other.m && n == other.n && graph.kind == other.graph.kind &&
         graph.edge_list == other.graph.edge_list && seed == other.seed &&
         alpha0 == other.alpha0 && c_auto == other.c_auto &&
         (c_auto || c == other.c) && iterations == other.iterations &&
         record_every == other.record_every && box.lower == other.box.lower &&
         box.upper == other.box.upper &&
         priorities_random == other.priorities_random &&
         same_table(priorities_table, other.priorities_table) &&
         min_weight == other.min_weight &&
         initial_x_random == other.initial_x_random &&
         same_table(initial_x_table, other.initial_x_table) &&
         gradient_at == other.gradient_at &&
         epsilon_auto == other.epsilon_auto &&
         (epsilon_auto || epsilon == other.epsilon) && out_dir == other.out_dir;
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig cfg;
  try {
    parse_into(cfg, doc, /*require_core=*/true);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("config field has the wrong type: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

RunConfig apply_overrides(RunConfig base, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("overrides are not valid JSON: ") + e.what());
  }
  try {
    parse_into(base, doc, /*require_core=*/false);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("config field has the wrong type: ") + e.what());
  }
  validate(base);
  return base;
}

std::string serialize_config(const RunConfig& cfg) {
  json doc;
  doc["m"] = cfg.m;
  doc["n"] = cfg.n;
  switch (cfg.graph.kind) {
    case GraphKind::kComplete: doc["graph"] = "complete"; break;
    case GraphKind::kPath: doc["graph"] = "path"; break;
    case GraphKind::kEdges: {
      json edges = json::array();
      for (const auto& [i, j] : cfg.graph.edge_list) {
        edges.push_back(json::array({i, j}));
      }
      doc["graph"] = std::move(edges);
      break;
    }
  }
  doc["seed"] = cfg.seed;
  doc["alpha0"] = cfg.alpha0;
  if (cfg.c_auto) {
    doc["c"] = "auto";
  } else {
    doc["c"] = cfg.c;
  }
  doc["iterations"] = cfg.iterations;
  doc["record_every"] = cfg.record_every;
  doc["box"] = json::array({cfg.box.lower, cfg.box.upper});
  if (cfg.priorities_random) {
    doc["priorities"] = "random";
  } else {
    doc["priorities"] = table_to_json(cfg.priorities_table);
  }
  doc["min_weight"] = cfg.min_weight;
  if (cfg.initial_x_random) {
    doc["initial_x"] = "random";
  } else {
    doc["initial_x"] = table_to_json(cfg.initial_x_table);
  }
  doc["gradient_at"] =
      cfg.gradient_at == GradientAt::kIterate ? "iterate" : "mixed";
  if (cfg.epsilon_auto) {
    doc["epsilon"] = "auto";
  } else {
    doc["epsilon"] = cfg.epsilon;
  }
  doc["out"] = cfg.out_dir;
  return doc.dump(2);
}

std::uint64_t config_hash(const RunConfig& cfg) {
  const std::string text = serialize_config(cfg);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

Graph resolve_graph(const RunConfig& cfg) {
  switch (cfg.graph.kind) {
    case GraphKind::kComplete: return complete_graph(cfg.m);
    case GraphKind::kPath: return path_graph(cfg.m);
    case GraphKind::kEdges: return build_graph(cfg.m, cfg.graph.edge_list);
  }
  fail(ErrorKind::kUsage, "unreachable graph kind");
}

double resolve_gain(const RunConfig& cfg, const Graph& g) {
  return cfg.c_auto ? default_gain(g) : cfg.c;
}

Eigen::MatrixXd resolve_priorities(const RunConfig& cfg) {
  if (cfg.priorities_random) {
    return random_priorities(substream(cfg.seed, kPriorityTag), cfg.m,
                             cfg.min_weight);
  }
  return cfg.priorities_table;
}

Eigen::MatrixXd resolve_initial_x(const RunConfig& cfg) {
  if (!cfg.initial_x_random) return cfg.initial_x_table;
  SplitMix64 rng(substream(cfg.seed, kInitialXTag));
  Eigen::MatrixXd x0(cfg.m, cfg.n);
  for (int i = 0; i < cfg.m; ++i)
    for (int j = 0; j < cfg.n; ++j)
      x0(i, j) = rng.uniform(cfg.box.lower, cfg.box.upper);
  return x0;
}

std::vector<QuadraticProblem> resolve_problems(const RunConfig& cfg) {
  std::vector<QuadraticProblem> problems;
  problems.reserve(cfg.m);
  for (int i = 0; i < cfg.m; ++i) {
    problems.push_back(
        generate_quadratic(substream(cfg.seed, kProblemTag + i), cfg.n));
  }
  return problems;
}

double resolve_epsilon(const RunConfig& cfg) {
  return cfg.epsilon_auto ? cfg.alpha0 : cfg.epsilon;
}

RunConfig scenario_config(const std::string& name) {
  RunConfig cfg;
  if (name == "quad3x10") {
    cfg.m = 3;
    cfg.n = 10;
    cfg.graph.kind = GraphKind::kComplete;
    cfg.seed = 7;
    cfg.alpha0 = 1.0;
    cfg.iterations = 100000;
    cfg.record_every = 1000;
    cfg.priorities_random = false;
    cfg.priorities_table.resize(3, 3);
    cfg.priorities_table << 0.3495, 0.3027, 0.3478,  //
        0.2232, 0.3838, 0.3930,                      //
        0.6315, 0.2494, 0.1191;
    return cfg;
  }
  if (name == "pareto2") {
    cfg.m = 2;
    cfg.n = 10;
    cfg.graph.kind = GraphKind::kComplete;
    cfg.seed = 7;
    cfg.alpha0 = 4.0;
    cfg.iterations = 100000;
    cfg.record_every = 1000;
    cfg.priorities_random = false;
    cfg.priorities_table.resize(2, 2);
    cfg.priorities_table << 0.5, 0.5, 0.5, 0.5;
    return cfg;
  }
  if (name == "quad100x100") {
    cfg.m = 20;
    cfg.n = 20;
    cfg.graph.kind = GraphKind::kComplete;
    cfg.seed = 7;
    cfg.alpha0 = 1.0;
    cfg.iterations = 50000;
    cfg.record_every = 500;
    cfg.priorities_random = true;
    return cfg;
  }
  fail(ErrorKind::kUsage, "unknown scenario \"" + name +
                              "\" (expected pareto2, quad3x10 or quad100x100)");
}

}  // namespace dmopt
