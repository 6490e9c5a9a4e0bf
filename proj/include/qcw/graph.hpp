#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qcw {

/// Vertices are 1-indexed throughout, including serialized forms.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted clique of mutually compatible measurements.
struct Context {
  std::vector<Vertex> vertices;

  bool contains(Vertex v) const;
  friend bool operator==(const Context&, const Context&) = default;
  friend auto operator<=>(const Context&, const Context&) = default;
};

/// Undirected compatibility graph with the two Hardy partitions.
///
/// For the family graphs (n > 5) `part_a` and `part_b` are the two complete
/// subgraphs; for even n they share the vertex n/2 + 1. The pentagon and
/// user graphs leave both partitions empty.
class Graph {
 public:
  Graph() = default;
  /// Validates and canonicalizes: each pair ascending, list sorted, no duplicates.
  Graph(int n, std::vector<Edge> edges, std::vector<Vertex> part_a = {},
        std::vector<Vertex> part_b = {});

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& part_a() const { return part_a_; }
  const std::vector<Vertex>& part_b() const { return part_b_; }
  bool has_partitions() const { return !part_a_.empty() && !part_b_.empty(); }

  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vertex> part_a_;
  std::vector<Vertex> part_b_;
  std::vector<std::vector<bool>> adjacency_;
};

/// Largest graph accepted by the exhaustive independence searches.
inline constexpr int kMaxExhaustiveVertices = 24;

/// Pentagon for n = 5, otherwise the two-clique family graph.
Graph build_family_graph(int n);

/// Exact independence number by pruned subset search. Requires n <= 24.
int independence_number(const Graph& g);

/// All maximal cliques, each sorted, list sorted lexicographically.
std::vector<Context> maximal_cliques(const Graph& g);

/// Size of the largest clique in `cliques`.
int max_clique_size(const std::vector<Context>& cliques);

}  // namespace qcw
