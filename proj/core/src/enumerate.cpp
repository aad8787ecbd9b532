#include "gridlock/enumerate.hpp"

#include <algorithm>

namespace gridlock {

namespace {

Cycle make_cycle(const WeightedGraph& g, const std::vector<int>& verts) {
  Cycle c;
  c.vertices = verts;
  int m = static_cast<int>(verts.size());
  for (int k = 0; k < m; ++k) {
    c.cycle_edges.push_back(g.edge_index(verts[k], verts[(k + 1) % m]));
    c.vertex_mask |= bit(verts[k]);
  }
  // Chords: graph edges between non-consecutive cycle vertices.
  std::vector<int> pos(g.vertex_count(), -1);
  for (int k = 0; k < m; ++k) pos[verts[k]] = k;
  for (int k = 0; k < m; ++k) {
    mask_t others = g.neighbors(verts[k]) & c.vertex_mask;
    while (others) {
      int w = lowest_vertex(others);
      others &= others - 1;
      if (w <= verts[k]) continue;  // each chord once
      int dk = pos[w] - k;
      if (dk < 0) dk += m;
      if (dk == 1 || dk == m - 1) continue;  // consecutive: cycle edge
      c.chords.push_back(g.edge_index(verts[k], w));
    }
  }
  std::sort(c.chords.begin(), c.chords.end());
  c.max_weight = g.edge(c.cycle_edges[0]).weight;
  for (int e : c.cycle_edges)
    if (c.max_weight < g.edge(e).weight) c.max_weight = g.edge(e).weight;
  for (int e : c.chords)
    if (c.max_weight < g.edge(e).weight) c.max_weight = g.edge(e).weight;
  return c;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const WeightedGraph& g, const EnumLimits& limits) {
  std::vector<Cycle> out;
  int n = g.vertex_count();
  std::vector<int> stack;
  mask_t on_stack = 0;

  // Each cycle is rooted at its smallest vertex; reflection is killed by
  // requiring the second vertex to be smaller than the last.
  for (int root = 0; root < n; ++root) {
    stack.assign(1, root);
    on_stack = bit(root);
    auto dfs = [&](auto&& self, int v) -> void {
      mask_t cand = g.neighbors(v);
      while (cand) {
        int w = lowest_vertex(cand);
        cand &= cand - 1;
        if (w == root) {
          if (stack.size() >= 3 && stack[1] < stack.back()) {
            if (out.size() >= limits.max_cycles)
              throw resource_limit_error("cycle enumeration exceeded cap of " +
                                            std::to_string(limits.max_cycles));
            out.push_back(make_cycle(g, stack));
          }
          continue;
        }
        if (w < root || contains(on_stack, w)) continue;
        stack.push_back(w);
        on_stack |= bit(w);
        self(self, w);
        stack.pop_back();
        on_stack &= ~bit(w);
      }
    };
    dfs(dfs, root);
  }
  return out;
}

std::vector<Path> enumerate_paths(const WeightedGraph& g, int min_edges,
                                  const EnumLimits& limits) {
  std::vector<Path> out;
  int n = g.vertex_count();
  std::vector<int> stack;
  mask_t on_stack = 0;

  for (int start = 0; start < n; ++start) {
    stack.assign(1, start);
    on_stack = bit(start);
    auto dfs = [&](auto&& self, int v) -> void {
      mask_t cand = g.neighbors(v) & ~on_stack;
      while (cand) {
        int w = lowest_vertex(cand);
        cand &= cand - 1;
        stack.push_back(w);
        on_stack |= bit(w);
        // Canonical orientation: emit only with the smaller endpoint first.
        if (static_cast<int>(stack.size()) - 1 >= min_edges && start < w) {
          if (out.size() >= limits.max_paths)
            throw resource_limit_error("path enumeration exceeded cap of " +
                                          std::to_string(limits.max_paths));
          Path p;
          p.vertices = stack;
          for (std::size_t i = 0; i + 1 < stack.size(); ++i)
            p.edges.push_back(g.edge_index(stack[i], stack[i + 1]));
          out.push_back(std::move(p));
        }
        self(self, w);
        stack.pop_back();
        on_stack &= ~bit(w);
      }
    };
    dfs(dfs, start);
  }
  return out;
}

std::vector<Star> enumerate_stars(const WeightedGraph& g) {
  std::vector<Star> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> inc;
    mask_t nb = g.neighbors(v);
    while (nb) {
      int w = lowest_vertex(nb);
      nb &= nb - 1;
      inc.push_back(g.edge_index(v, w));
    }
    std::sort(inc.begin(), inc.end());
    int d = static_cast<int>(inc.size());
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        for (int c = b + 1; c < d; ++c) out.push_back({v, inc[a], inc[b], inc[c]});
  }
  return out;
}

std::vector<Pan> enumerate_pans(const WeightedGraph& g, const EnumLimits& limits) {
  std::vector<Pan> out;
  std::vector<Cycle> cycles = enumerate_cycles(g, limits);
  std::vector<int> stack;
  for (const Cycle& c : cycles) {
    for (int attach : c.vertices) {
      stack.assign(1, attach);
      mask_t blocked = c.vertex_mask;  // path may not revisit the cycle
      auto dfs = [&](auto&& self, int v) -> void {
        mask_t cand = g.neighbors(v) & ~blocked;
        while (cand) {
          int w = lowest_vertex(cand);
          cand &= cand - 1;
          stack.push_back(w);
          blocked |= bit(w);
          if (out.size() >= limits.max_pans)
            throw resource_limit_error("pan enumeration exceeded cap of " +
                                          std::to_string(limits.max_pans));
          Pan p;
          p.cycle = c;
          p.path_vertices = stack;
          for (std::size_t i = 0; i + 1 < stack.size(); ++i)
            p.path_edges.push_back(g.edge_index(stack[i], stack[i + 1]));
          p.attach = attach;
          out.push_back(std::move(p));
          self(self, w);
          stack.pop_back();
          blocked &= ~bit(w);
        }
      };
      dfs(dfs, attach);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> adjacent_cycle_pairs(const std::vector<Cycle>& cycles,
                                                      const EnumLimits& limits) {
  std::vector<std::pair<int, int>> out;
  std::vector<std::vector<int>> sorted_edges(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    sorted_edges[i] = cycles[i].cycle_edges;
    std::sort(sorted_edges[i].begin(), sorted_edges[i].end());
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const auto& a = sorted_edges[i];
      const auto& b = sorted_edges[j];
      std::size_t x = 0, y = 0;
      bool share = false;
      while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) {
          share = true;
          break;
        }
        a[x] < b[y] ? ++x : ++y;
      }
      if (share) {
        if (out.size() >= limits.max_cycle_pairs)
          throw resource_limit_error("adjacent cycle pair enumeration exceeded cap of " +
                                        std::to_string(limits.max_cycle_pairs));
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

}  // namespace gridlock
