#include "qcw/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qcw {

bool Context::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<Vertex> part_a,
             std::vector<Vertex> part_b)
    : n_(n), part_a_(std::move(part_a)), part_b_(std::move(part_b)) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  auto in_range = [n](Vertex v) { return v >= 1 && v <= n; };
  for (auto& [u, v] : edges) {
    if (!in_range(u) || !in_range(v))
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} out of range 1.." + std::to_string(n));
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto* part : {&part_a_, &part_b_})
    for (Vertex v : *part)
      if (!in_range(v)) throw std::invalid_argument("partition vertex out of range");

  adjacency_.assign(n + 1, std::vector<bool>(n + 1, false));
  for (const auto& [u, v] : edges_) adjacency_[u][v] = adjacency_[v][u] = true;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  return adjacency_[u][v];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 1; u <= n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

Graph build_family_graph(int n) {
  if (n < 5) throw std::invalid_argument("family graph requires n >= 5, got " + std::to_string(n));
  std::vector<Edge> edges;
  if (n == 5) {
    for (Vertex i = 1; i <= 5; ++i) edges.emplace_back(i, i % 5 + 1);
    return Graph(5, std::move(edges));
  }

  std::vector<Vertex> part_a;
  std::vector<Vertex> part_b;
  const Vertex last_a = (n % 2 == 1) ? (n + 1) / 2 : n / 2 + 1;
  const Vertex first_b = (n % 2 == 1) ? (n + 1) / 2 + 1 : n / 2 + 1;
  for (Vertex v = 2; v <= last_a; ++v) part_a.push_back(v);
  for (Vertex v = first_b; v <= n; ++v) part_b.push_back(v);

  for (Vertex v = 3; v <= n - 1; ++v) edges.emplace_back(1, v);
  edges.emplace_back(2, n);
  for (const auto* part : {&part_a, &part_b})
    for (std::size_t i = 0; i < part->size(); ++i)
      for (std::size_t j = i + 1; j < part->size(); ++j) edges.emplace_back((*part)[i], (*part)[j]);

  return Graph(n, std::move(edges), std::move(part_a), std::move(part_b));
}

namespace {

void check_exhaustive_bound(const Graph& g) {
  if (g.n() > kMaxExhaustiveVertices)
    throw std::invalid_argument("exhaustive search limited to " +
                                std::to_string(kMaxExhaustiveVertices) + " vertices, got " +
                                std::to_string(g.n()));
}

// Include/exclude branching on the lowest candidate, pruned by the
// size + |candidates| <= best bound.
void grow_independent(const std::vector<std::uint32_t>& closed_nbr, std::uint32_t candidates,
                      int size, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(candidates) <= best) return;
  const int v = std::countr_zero(candidates);
  grow_independent(closed_nbr, candidates & ~closed_nbr[v], size + 1, best);
  grow_independent(closed_nbr, candidates & ~(std::uint32_t{1} << v), size, best);
}

void bron_kerbosch(const Graph& g, std::vector<Vertex>& clique, std::vector<Vertex> candidates,
                   std::vector<Vertex> excluded, std::vector<Context>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) {
      Context c{clique};
      std::sort(c.vertices.begin(), c.vertices.end());
      out.push_back(std::move(c));
    }
    return;
  }
  // Pivot: vertex of P ∪ X with the most neighbors in P.
  Vertex pivot = candidates.front();
  std::size_t best = 0;
  for (const auto* set : {&candidates, &excluded}) {
    for (Vertex u : *set) {
      const auto cnt = static_cast<std::size_t>(std::count_if(
          candidates.begin(), candidates.end(), [&](Vertex w) { return g.adjacent(u, w); }));
      if (cnt >= best) {
        best = cnt;
        pivot = u;
      }
    }
  }
  const std::vector<Vertex> branch = [&] {
    std::vector<Vertex> b;
    for (Vertex v : candidates)
      if (!g.adjacent(pivot, v)) b.push_back(v);
    return b;
  }();
  for (Vertex v : branch) {
    std::vector<Vertex> next_p;
    std::vector<Vertex> next_x;
    for (Vertex w : candidates)
      if (g.adjacent(v, w)) next_p.push_back(w);
    for (Vertex w : excluded)
      if (g.adjacent(v, w)) next_x.push_back(w);
    clique.push_back(v);
    bron_kerbosch(g, clique, std::move(next_p), std::move(next_x), out);
    clique.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.push_back(v);
  }
}

}  // namespace

int independence_number(const Graph& g) {
  check_exhaustive_bound(g);
  std::vector<std::uint32_t> closed_nbr(g.n(), 0);
  for (int i = 0; i < g.n(); ++i) {
    closed_nbr[i] = std::uint32_t{1} << i;
    for (Vertex u : g.neighbors(i + 1)) closed_nbr[i] |= std::uint32_t{1} << (u - 1);
  }
  const std::uint32_t all = g.n() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << g.n()) - 1;
  int best = 0;
  grow_independent(closed_nbr, all, 0, best);
  return best;
}

std::vector<Context> maximal_cliques(const Graph& g) {
  std::vector<Context> out;
  std::vector<Vertex> clique;
  std::vector<Vertex> all(g.n());
  for (int i = 0; i < g.n(); ++i) all[i] = i + 1;
  bron_kerbosch(g, clique, all, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

int max_clique_size(const std::vector<Context>& cliques) {
  std::size_t best = 0;
  for (const auto& c : cliques) best = std::max(best, c.vertices.size());
  return static_cast<int>(best);
}

}  // namespace qcw
