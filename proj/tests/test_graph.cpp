#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "qcw/graph.hpp"

using namespace qcw;

namespace {

bool has_clique(const std::vector<Context>& cliques, std::vector<Vertex> vs) {
  return std::find(cliques.begin(), cliques.end(), Context{vs}) != cliques.end();
}

}  // namespace

TEST_CASE("n=7 family: two triangles, hub and the 2-7 edge") {
  const Graph g = build_family_graph(7);
  CHECK(g.part_a() == std::vector<Vertex>{2, 3, 4});
  CHECK(g.part_b() == std::vector<Vertex>{5, 6, 7});
  CHECK(g.neighbors(1) == std::vector<Vertex>{3, 4, 5, 6});
  CHECK(g.adjacent(2, 7));
  for (auto [u, v] : {Edge{2, 3}, Edge{2, 4}, Edge{3, 4}, Edge{5, 6}, Edge{5, 7}, Edge{6, 7}}) CHECK(g.adjacent(u, v));
  CHECK_FALSE(g.adjacent(4, 5));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.edges().size() == 11);
}

TEST_CASE("n=8 family: cliques share vertex 5") {
  const Graph g = build_family_graph(8);
  CHECK(g.part_a() == std::vector<Vertex>{2, 3, 4, 5});
  CHECK(g.part_b() == std::vector<Vertex>{5, 6, 7, 8});
  const auto cliques = maximal_cliques(g);
  CHECK(has_clique(cliques, {2, 3, 4, 5}));
  CHECK(has_clique(cliques, {5, 6, 7, 8}));
}

TEST_CASE("n=5 is the pentagon") {
  const Graph g = build_family_graph(5);
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(g.part_a().empty());
  CHECK_FALSE(g.has_partitions());
  const auto cliques = maximal_cliques(g);
  CHECK(cliques.size() == 5);
  for (const auto& c : cliques) CHECK(c.vertices.size() == 2);
  CHECK(independence_number(g) == 2);
}

TEST_CASE("build_family_graph rejects n < 5") {
  CHECK_THROWS_AS(build_family_graph(4), std::invalid_argument);
  CHECK_THROWS_AS(build_family_graph(0), std::invalid_argument);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  const Graph g(3, {{3, 1}, {1, 3}, {2, 1}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}});
}

TEST_CASE("independence number") {
  CHECK(independence_number(Graph(4, {})) == 4);
  CHECK(independence_number(build_family_graph(7)) == 2);
  CHECK(independence_number(Graph(24, {})) == 24);
  CHECK_THROWS_AS(independence_number(Graph(25, {})), std::invalid_argument);
}

TEST_CASE("family invariants for 6 <= n <= 20") {
  for (int n = 6; n <= 20; ++n) {
    CAPTURE(n);
    const Graph g = build_family_graph(n);
    CHECK(independence_number(g) == 2);

    // V_A and V_B are cliques, vertex 1 sees exactly 3..n-1.
    for (const auto* part : {&g.part_a(), &g.part_b()})
      for (Vertex u : *part)
        for (Vertex v : *part)
          if (u != v) CHECK(g.adjacent(u, v));
    std::vector<Vertex> hub;
    for (Vertex v = 3; v <= n - 1; ++v) hub.push_back(v);
    CHECK(g.neighbors(1) == hub);

    const auto cliques = maximal_cliques(g);
    const int expected_max = (n % 2 == 1) ? (n - 1) / 2 : n / 2;
    CHECK(max_clique_size(cliques) == expected_max);
    CHECK(max_clique_size(cliques) == static_cast<int>(g.part_a().size()));

    std::map<Vertex, int> membership;
    for (const auto& c : cliques) {
      CHECK(std::is_sorted(c.vertices.begin(), c.vertices.end()));
      for (std::size_t i = 0; i < c.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < c.vertices.size(); ++j) CHECK(g.adjacent(c.vertices[i], c.vertices[j]));
      for (Vertex v : c.vertices) ++membership[v];
    }
    for (Vertex v = 1; v <= n; ++v) CHECK(membership[v] >= 2);
    CHECK(std::is_sorted(cliques.begin(), cliques.end()));
  }
}

TEST_CASE("maximal cliques are maximal and complete on small random graphs") {
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(next() % 8);
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        if (next() % 2) edges.emplace_back(u, v);
    const Graph g(n, edges);
    const auto cliques = maximal_cliques(g);

    // Brute-force set of maximal cliques.
    std::vector<Context> brute;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      auto is_clique = [&](std::uint32_t m) {
        for (Vertex u = 1; u <= n; ++u)
          for (Vertex v = u + 1; v <= n; ++v)
            if ((m >> (u - 1) & 1u) && (m >> (v - 1) & 1u) && !g.adjacent(u, v)) return false;
        return true;
      };
      if (!is_clique(mask)) continue;
      bool maximal = true;
      for (int k = 0; k < n; ++k)
        if (!(mask >> k & 1u) && is_clique(mask | (1u << k))) maximal = false;
      if (!maximal) continue;
      Context c;
      for (int k = 0; k < n; ++k)
        if (mask >> k & 1u) c.vertices.push_back(k + 1);
      brute.push_back(c);
    }
    std::sort(brute.begin(), brute.end());
    CHECK(cliques == brute);
    CHECK(independence_number(g) == oracle::enumerate_all_subsets(g).max_ones);
  }
}
