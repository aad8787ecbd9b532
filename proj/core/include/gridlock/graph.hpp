#pragma once

#include <optional>
#include <vector>

#include "gridlock/coalition.hpp"
#include "gridlock/rational.hpp"

namespace gridlock {

// Undirected edge with exact weight. Stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Rational weight;

  mask_t ends() const { return bit(u) | bit(v); }
  bool incident(int x) const { return x == u || x == v; }
  int other(int x) const { return x == u ? v : u; }
};

// Simple weighted graph on vertices [0, n), n <= 32. No self-loops, no
// parallel edges. Immutable after construction; all queries are const.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int index) const { return edges_[index]; }

  // -1 when absent.
  int edge_index(int u, int v) const {
    if (u == v) return -1;
    return edge_at_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  const Rational& weight(int u, int v) const;

  mask_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  mask_t vertices() const { return full_mask(n_); }

  // Members of `inside` adjacent to v.
  mask_t neighbors_in(int v, mask_t inside) const { return adj_[v] & inside; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<mask_t> adj_;
  std::vector<int> edge_at_;  // n*n flat lookup, -1 when absent
};

// E(A): indices of edges with both endpoints in A.
std::vector<int> induced_edges(const WeightedGraph& g, mask_t a);

// Sigma(A): indices of the minimum-weight edges of E(A); empty when E(A) is.
std::vector<int> min_weight_edges(const WeightedGraph& g, mask_t a);

// sigma(A): the minimum edge weight over E(A), when E(A) is nonempty.
std::optional<Rational> sigma(const WeightedGraph& g, mask_t a);

// E(A, i): edges joining i to a vertex of A. Requires i not in A.
std::vector<int> frontier_edges(const WeightedGraph& g, mask_t a, int i);
std::optional<Rational> sigma_frontier(const WeightedGraph& g, mask_t a, int i);
std::optional<Rational> max_frontier(const WeightedGraph& g, mask_t a, int i);

// Connected components of the induced subgraph G_A, each as a vertex mask,
// ordered by lowest member. Empty list for A = empty.
std::vector<mask_t> connected_components(const WeightedGraph& g, mask_t a);

// True iff A is nonempty and G_A is connected (singletons are connected).
bool is_connected_subset(const WeightedGraph& g, mask_t a);

}  // namespace gridlock
