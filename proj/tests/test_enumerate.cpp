#include <doctest.h>

#include <random>

#include "gridlock/enumerate.hpp"
#include "naive_oracles.hpp"

using namespace gridlock;

namespace {

WeightedGraph complete(int n, Rational w = 1) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, w});
  return WeightedGraph(n, edges);
}

WeightedGraph random_graph(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 2) edges.push_back({u, v, Rational(1 + static_cast<int>(rng() % 3))});
  return WeightedGraph(n, edges);
}

}  // namespace

TEST_CASE("cycle enumeration on small fixtures") {
  WeightedGraph tri = complete(3);
  auto cs = enumerate_cycles(tri);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(cs[0].chords.empty());

  // K4: 4 triangles + 3 four-cycles, each four-cycle with 2 chords.
  // Frozen from the generate-and-filter oracle below.
  WeightedGraph k4 = complete(4);
  auto cs4 = enumerate_cycles(k4);
  CHECK(cs4.size() == 7);
  CHECK(naive::cycles(k4).size() == 7);
  int triangles = 0, squares = 0;
  for (const auto& c : cs4) {
    if (c.length() == 3) {
      ++triangles;
      CHECK(c.chords.empty());
    } else {
      ++squares;
      CHECK(c.chords.size() == 2);
    }
  }
  CHECK(triangles == 4);
  CHECK(squares == 3);

  WeightedGraph tree(5, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {3, 4, 1}});
  CHECK(enumerate_cycles(tree).empty());
}

TEST_CASE("cycle chord bookkeeping and max weight") {
  // C4 on 0..3 plus chord {0,2} carrying the maximum.
  WeightedGraph g(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 2}, {3, 0, 2}, {0, 2, 5}});
  for (const Cycle& c : enumerate_cycles(g)) {
    for (int idx : c.chords) {
      const Edge& e = g.edge(idx);
      CHECK((c.vertex_mask & e.ends()) == e.ends());
    }
    for (int idx : c.cycle_edges) CHECK(g.edge(idx).weight <= c.max_weight);
    for (int idx : c.chords) CHECK(g.edge(idx).weight <= c.max_weight);
    if (c.length() == 4) {
      REQUIRE(c.chords.size() == 1);
      CHECK(c.max_weight == Rational(5));
    }
  }
}

TEST_CASE("path enumeration") {
  WeightedGraph p4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  auto ps = enumerate_paths(p4, 3);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].vertices == std::vector<int>{0, 1, 2, 3});

  // A triangle has no simple path with three edges.
  CHECK(enumerate_paths(complete(3), 3).empty());
  CHECK(naive::paths(complete(3), 3).empty());

  // Star K1,3: the center would repeat.
  WeightedGraph star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  CHECK(enumerate_paths(star, 3).empty());
}

TEST_CASE("star enumeration counts") {
  WeightedGraph k13(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  CHECK(enumerate_stars(k13).size() == 1);
  WeightedGraph k14(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  CHECK(enumerate_stars(k14).size() == 4);  // C(4,3)
  CHECK(enumerate_stars(complete(3)).empty());
}

TEST_CASE("pan enumeration") {
  // Triangle with a pendant edge at vertex 0.
  WeightedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}});
  auto pans = enumerate_pans(g);
  REQUIRE(pans.size() == 1);
  CHECK(pans[0].attach == 0);
  CHECK(pans[0].path_vertices == std::vector<int>{0, 3});

  // Plain cycle: nothing to attach.
  WeightedGraph c4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  CHECK(enumerate_pans(c4).empty());

  // C4 plus a two-edge tail: the one-edge prefix and the full tail.
  WeightedGraph tail(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 4, 1}, {4, 5, 1}});
  auto pans2 = enumerate_pans(tail);
  CHECK(pans2.size() == 2);
  CHECK(naive::pans(tail).size() == 2);
}

TEST_CASE("adjacent cycle pairs") {
  // Two triangles glued on an edge: 3 cycles, all pairs share an edge.
  WeightedGraph glued(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {1, 3, 1}, {0, 3, 1}});
  auto cycles = enumerate_cycles(glued);
  CHECK(cycles.size() == 3);
  CHECK(adjacent_cycle_pairs(cycles).size() == 3);
  CHECK(naive::adjacent_pairs(glued).size() == 3);

  // Bowtie: triangles share only a vertex.
  WeightedGraph bowtie(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 1}});
  auto bc = enumerate_cycles(bowtie);
  CHECK(bc.size() == 2);
  CHECK(adjacent_cycle_pairs(bc).empty());

  auto single = enumerate_cycles(complete(3));
  CHECK(adjacent_cycle_pairs(single).empty());
}

TEST_CASE("enumeration caps raise resource errors") {
  WeightedGraph k6 = complete(6);
  EnumLimits tight;
  tight.max_cycles = 5;
  CHECK_THROWS_AS(enumerate_cycles(k6, tight), resource_limit_error);
  EnumLimits tight_paths;
  tight_paths.max_paths = 3;
  CHECK_THROWS_AS(enumerate_paths(k6, 3, tight_paths), resource_limit_error);
}

TEST_CASE("enumeration is deterministic") {
  std::mt19937_64 rng(11);
  WeightedGraph g = random_graph(6, rng);
  auto a = enumerate_cycles(g);
  auto b = enumerate_cycles(g);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].vertices == b[i].vertices);
}

TEST_CASE("enumerations match the generate-and-filter oracles") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    WeightedGraph g = random_graph(n, rng);

    std::set<std::vector<int>> got_cycles;
    for (const auto& c : enumerate_cycles(g)) got_cycles.insert(c.vertices);
    CHECK(got_cycles == naive::cycles(g));

    std::set<std::vector<int>> got_paths;
    for (const auto& p : enumerate_paths(g, 3)) got_paths.insert(p.vertices);
    CHECK(got_paths == naive::paths(g, 3));

    std::set<std::pair<std::vector<int>, std::vector<int>>> got_pans;
    for (const auto& p : enumerate_pans(g)) got_pans.insert({p.cycle.vertices, p.path_vertices});
    CHECK(got_pans == naive::pans(g));

    auto cycles = enumerate_cycles(g);
    std::set<std::pair<std::vector<int>, std::vector<int>>> got_pairs;
    for (auto [i, j] : adjacent_cycle_pairs(cycles)) {
      auto a = cycles[i].vertices;
      auto b = cycles[j].vertices;
      if (b < a) std::swap(a, b);
      got_pairs.insert({a, b});
    }
    std::set<std::pair<std::vector<int>, std::vector<int>>> want_pairs;
    for (auto [a, b] : naive::adjacent_pairs(g)) {
      if (b < a) std::swap(a, b);
      want_pairs.insert({a, b});
    }
    CHECK(got_pairs == want_pairs);
  }
}
