#include "qcw/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qcw {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

double number(const json& v) {
  if (!v.is_number()) throw FormatError("expected a number");
  return v.get<double>();
}

json edge_list(const std::vector<EdgeOverlap>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({{"edge", {e.edge.first, e.edge.second}}, {"overlap", e.overlap}});
  return out;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json amplitudes_to_json(const ComplexVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

ComplexVector amplitudes_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("amplitude list must be an array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& pair = j[k];
    if (!pair.is_array() || pair.size() != 2) throw FormatError("amplitude must be an [re, im] pair");
    v(static_cast<Eigen::Index>(k)) = Complex(number(pair[0]), number(pair[1]));
  }
  return v;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}, {"part_a", g.part_a()}, {"part_b", g.part_b()}};
}

Graph graph_from_json(const json& j) {
  const int n = require_int(j, "n");
  std::vector<Edge> edges;
  for (const auto& e : require(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw FormatError("edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  auto part = [&](const char* key) {
    std::vector<Vertex> out;
    if (j.contains(key))
      for (const auto& v : j.at(key)) {
        if (!v.is_number_integer()) throw FormatError("partition entries must be integers");
        out.push_back(v.get<int>());
      }
    return out;
  };
  try {
    return Graph(n, std::move(edges), part("part_a"), part("part_b"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

json family_to_json(const Family& fam) {
  json vectors = json::object();
  for (const auto& [v, vec] : fam.vectors) vectors[std::to_string(v)] = amplitudes_to_json(vec);
  return {{"n", fam.n}, {"d", fam.d}, {"state", amplitudes_to_json(fam.state)}, {"vectors", vectors}};
}

Family family_from_json(const json& j) {
  Family fam;
  fam.n = require_int(j, "n");
  fam.d = require_int(j, "d");
  if (fam.n < 1 || fam.d < 1) throw FormatError("family needs n >= 1 and d >= 1");
  fam.state = amplitudes_from_json(require(j, "state"));
  if (fam.state.size() != fam.d) throw FormatError("state length differs from d");
  const json& vectors = require(j, "vectors");
  if (!vectors.is_object()) throw FormatError("\"vectors\" must be an object keyed by vertex");
  for (const auto& [key, value] : vectors.items()) {
    int vertex = 0;
    try {
      std::size_t used = 0;
      vertex = std::stoi(key, &used);
      if (used != key.size()) throw FormatError("bad vertex key \"" + key + "\"");
    } catch (const std::logic_error&) {
      throw FormatError("bad vertex key \"" + key + "\"");
    }
    if (vertex < 1 || vertex > fam.n) throw FormatError("vertex key out of range: " + key);
    fam.vectors[vertex] = amplitudes_from_json(value);
    if (fam.vectors[vertex].size() != fam.d) throw FormatError("vector " + key + " length differs from d");
  }
  if (static_cast<int>(fam.vectors.size()) != fam.n) throw FormatError("family must list one vector per vertex");
  return fam;
}

json report_to_json(const VerificationReport& r) {
  return {
      {"n", r.n},
      {"d", r.d},
      {"tol", r.tol},
      {"exclusivity_ok", r.exclusivity.ok},
      {"worst_edge_overlap", r.exclusivity.worst_edge_overlap},
      {"min_nonedge_overlap", r.exclusivity.min_nonedge_overlap},
      {"worst_edges", edge_list(r.exclusivity.worst_edges)},
      {"hardy_applicable", r.hardy_applicable},
      {"hardy_conditions_ok", r.hardy_conditions_ok},
      {"residual_a", r.residual_a},
      {"residual_b", r.residual_b},
      {"p11", r.p11},
      {"beta", r.beta},
      {"sum_a", r.sum_a},
      {"sum_b", r.sum_b},
      {"classical_alpha", r.classical_alpha},
      {"classical_hardy_possible", optional_json(r.classical_hardy_possible)},
      {"classical_hardy_p11", optional_json(r.classical_hardy_p11)},
      {"kcbs_violated", r.kcbs_violated()},
      {"paradox_exhibited", r.paradox_exhibited()},
      {"passed", r.passed()},
  };
}

json classical_to_json(const ClassicalAnalysis& c) {
  return {{"alpha", c.alpha},
          {"hardy_possible_with_x1", optional_json(c.hardy_possible_with_x1)},
          {"assignments", c.assignments}};
}

json optimum_to_json(const EigenOptimum<double>& opt) {
  return {{"lambda_max", opt.lambda_max},
          {"state", amplitudes_to_json(opt.state)},
          {"restarts_used", opt.restarts_used},
          {"converged", opt.converged}};
}

json constellation_to_json(const Constellation& c) {
  json points = json::array();
  for (const auto& p : c.points) points.push_back({{"theta", p.theta}, {"phi", p.phi}, {"mult", p.mult}});
  if (c.south_pole_count > 0)
    points.push_back({{"theta", std::numbers::pi}, {"phi", 0.0}, {"mult", c.south_pole_count}});
  return {{"d", c.d}, {"points", points}};
}

Constellation constellation_from_json(const json& j) {
  Constellation c;
  c.d = require_int(j, "d");
  for (const auto& p : require(j, "points")) {
    SpherePoint s{number(require(p, "theta")), number(require(p, "phi")), require_int(p, "mult")};
    if (s.mult < 1) throw FormatError("multiplicity must be positive");
    if (s.theta == std::numbers::pi) {
      c.south_pole_count += s.mult;
    } else {
      c.points.push_back(s);
    }
  }
  if (c.total_points() != c.d - 1) throw FormatError("constellation must carry d - 1 points");
  return c;
}

json onc_to_json(const OncThreshold& t) {
  return {{"n", t.n}, {"delta", t.delta}, {"epsilon_bound", t.epsilon_bound}};
}

json simulation_to_json(const SimulationResult& r) {
  json contexts = json::array();
  for (const auto& c : r.contexts) {
    contexts.push_back({{"vertices", c.context.vertices},
                        {"histogram", c.histogram},
                        {"no_click", c.no_click()},
                        {"multi_click", c.multi_click},
                        {"yes_probability", c.yes_probability}});
  }
  return {{"shots", r.shots},
          {"seed", r.seed},
          {"contexts", contexts},
          {"empirical_beta", r.empirical_beta},
          {"expected_beta", r.expected_beta},
          {"beta_sigma", r.beta_sigma},
          {"empirical_exclusivity_violation", r.empirical_exclusivity_violation},
          {"epsilon_estimate_tv", r.epsilon_estimate}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into " + path.string() + ": " + ec.message());
  }
}

}  // namespace qcw
