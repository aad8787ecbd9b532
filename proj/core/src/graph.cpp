#include "gridlock/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace gridlock {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxPlayers)
    throw std::out_of_range("graph: vertex count must be in [0, 32]");
  adj_.assign(n_, 0);
  edge_at_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (auto& e : edges_) {
    if (e.u == e.v)
      throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::out_of_range("graph: edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const Edge& e = edges_[i];
    if (edge_at_[static_cast<std::size_t>(e.u) * n_ + e.v] >= 0)
      throw std::invalid_argument("graph: parallel edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    edge_at_[static_cast<std::size_t>(e.u) * n_ + e.v] = i;
    edge_at_[static_cast<std::size_t>(e.v) * n_ + e.u] = i;
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
}

const Rational& WeightedGraph::weight(int u, int v) const {
  int idx = edge_index(u, v);
  if (idx < 0) throw std::invalid_argument("graph: no such edge");
  return edges_[idx].weight;
}

std::vector<int> induced_edges(const WeightedGraph& g, mask_t a) {
  std::vector<int> out;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if ((e.ends() & a) == e.ends()) out.push_back(i);
  }
  return out;
}

std::vector<int> min_weight_edges(const WeightedGraph& g, mask_t a) {
  std::vector<int> out;
  std::optional<Rational> best;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if ((e.ends() & a) != e.ends()) continue;
    if (!best || e.weight < *best) {
      best = e.weight;
      out.clear();
      out.push_back(i);
    } else if (e.weight == *best) {
      out.push_back(i);
    }
  }
  return out;
}

std::optional<Rational> sigma(const WeightedGraph& g, mask_t a) {
  std::optional<Rational> best;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if ((e.ends() & a) != e.ends()) continue;
    if (!best || e.weight < *best) best = e.weight;
  }
  return best;
}

std::vector<int> frontier_edges(const WeightedGraph& g, mask_t a, int i) {
  if (contains(a, i)) throw std::domain_error("frontier_edges: i must lie outside A");
  std::vector<int> out;
  mask_t targets = g.neighbors(i) & a;
  while (targets) {
    int v = lowest_vertex(targets);
    targets &= targets - 1;
    out.push_back(g.edge_index(i, v));
  }
  return out;
}

std::optional<Rational> sigma_frontier(const WeightedGraph& g, mask_t a, int i) {
  std::optional<Rational> best;
  for (int idx : frontier_edges(g, a, i)) {
    const Rational& w = g.edge(idx).weight;
    if (!best || w < *best) best = w;
  }
  return best;
}

std::optional<Rational> max_frontier(const WeightedGraph& g, mask_t a, int i) {
  std::optional<Rational> best;
  for (int idx : frontier_edges(g, a, i)) {
    const Rational& w = g.edge(idx).weight;
    if (!best || w > *best) best = w;
  }
  return best;
}

std::vector<mask_t> connected_components(const WeightedGraph& g, mask_t a) {
  std::vector<mask_t> out;
  mask_t remaining = a;
  while (remaining) {
    mask_t comp = bit(lowest_vertex(remaining));
    for (;;) {
      mask_t grown = comp;
      mask_t scan = comp;
      while (scan) {
        int v = lowest_vertex(scan);
        scan &= scan - 1;
        grown |= g.neighbors(v) & a;
      }
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

bool is_connected_subset(const WeightedGraph& g, mask_t a) {
  if (a == 0) return false;
  mask_t comp = bit(lowest_vertex(a));
  for (;;) {
    mask_t grown = comp;
    mask_t scan = comp;
    while (scan) {
      int v = lowest_vertex(scan);
      scan &= scan - 1;
      grown |= g.neighbors(v) & a;
    }
    if (grown == comp) break;
    comp = grown;
  }
  return comp == a;
}

}  // namespace gridlock
