#pragma once

#include <cstddef>
#include <vector>

#include "gridlock/errors.hpp"
#include "gridlock/graph.hpp"

namespace gridlock {

struct EnumLimits {
  std::size_t max_cycles = 100000;
  std::size_t max_paths = 1000000;
  std::size_t max_pans = 1000000;
  std::size_t max_cycle_pairs = 1000000;
};

// A simple cycle v[0] .. v[m-1] (m >= 3), canonical: v[0] is the smallest
// vertex and v[1] < v[m-1]. cycle_edges[k] joins v[k] and v[(k+1) % m].
// Chords are the graph edges between non-consecutive cycle vertices;
// max_weight is the maximum weight over cycle edges and chords together.
struct Cycle {
  std::vector<int> vertices;
  std::vector<int> cycle_edges;
  std::vector<int> chords;      // sorted edge indices
  Rational max_weight;          // over cycle edges + chords
  mask_t vertex_mask = 0;

  int length() const { return static_cast<int>(vertices.size()); }
};

// A simple path v[0] .. v[k], canonical orientation: the vertex sequence is
// lexicographically no greater than its reverse (v[0] < v[k]).
struct Path {
  std::vector<int> vertices;
  std::vector<int> edges;  // edges[i] joins vertices[i] and vertices[i+1]

  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Three distinct edges sharing the center vertex.
struct Star {
  int center = 0;
  int e1 = 0, e2 = 0, e3 = 0;  // edge indices, e1 < e2 < e3
};

// A cycle and a path meeting in exactly one vertex; the shared vertex is the
// first vertex of the path.
struct Pan {
  Cycle cycle;
  std::vector<int> path_vertices;  // path_vertices[0] == attach
  std::vector<int> path_edges;
  int attach = 0;
};

// All simple cycles (m >= 3), each once up to rotation and reflection, with
// chords and max_weight filled in. Deterministic order. Throws
// resource_limit_error past limits.max_cycles.
std::vector<Cycle> enumerate_cycles(const WeightedGraph& g,
                                    const EnumLimits& limits = {});

// All simple paths with at least min_edges edges, each once up to reversal.
std::vector<Path> enumerate_paths(const WeightedGraph& g, int min_edges = 3,
                                  const EnumLimits& limits = {});

// All (center, edge-triple) stars.
std::vector<Star> enumerate_stars(const WeightedGraph& g);

// All (cycle, path) pans: path has >= 1 edge, starts at the attach vertex and
// avoids every other cycle vertex.
std::vector<Pan> enumerate_pans(const WeightedGraph& g, const EnumLimits& limits = {});

// Unordered pairs of distinct cycles sharing at least one edge, as index
// pairs (i, j) with i < j into the given cycle list.
std::vector<std::pair<int, int>> adjacent_cycle_pairs(const std::vector<Cycle>& cycles,
                                                      const EnumLimits& limits = {});

}  // namespace gridlock
