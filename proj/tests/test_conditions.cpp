#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "gridlock/conditions.hpp"
#include "gridlock/io.hpp"

using namespace gridlock;

namespace {

bool any_detail_contains(const ConditionOutcome& o, const std::string& needle) {
  return std::any_of(o.violations.begin(), o.violations.end(), [&](const Violation& v) {
    return v.detail.find(needle) != std::string::npos;
  });
}

WeightedGraph random_graph(int n, std::mt19937_64& rng, int weights = 3) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 2) edges.push_back({u, v, Rational(1 + static_cast<int>(rng() % weights))});
  return WeightedGraph(n, edges);
}

}  // namespace

TEST_CASE("star condition") {
  WeightedGraph ok(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 2}});
  CHECK(check_star(ok).pass);

  WeightedGraph bad(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}});
  auto out = check_star(bad);
  REQUIRE(!out.pass);
  REQUIRE(out.violations.size() == 1);
  auto w = std::get<StarWitness>(out.violations[0].witness);
  CHECK(w.center == 0);
  CHECK(violation_replays(bad, out.violations[0]));

  WeightedGraph deg2(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 0, 4}});
  CHECK(check_star(deg2).pass);  // max degree 2: vacuous
}

TEST_CASE("path condition") {
  WeightedGraph ok(4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 2}});
  CHECK(check_path(ok).pass);

  WeightedGraph bad(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}});
  auto out = check_path(bad);
  REQUIRE(!out.pass);
  auto w = std::get<PathWitness>(out.violations[0].witness);
  CHECK(w.i == 0);
  CHECK(w.j == 1);
  CHECK(w.k == 2);
  CHECK(violation_replays(bad, out.violations[0]));

  WeightedGraph star(4, {{0, 1, 1}, {0, 2, 5}, {0, 3, 1}});
  CHECK(check_path(star).pass);  // no three-edge simple path
}

TEST_CASE("cycle condition labeling search") {
  // Two maximum edges adjacent: some labeling works.
  WeightedGraph ok(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 0, 3}});
  CHECK(check_cycle(ok).pass);

  // Maximum edges separated by the sub-maximum ones: no labeling.
  WeightedGraph bad(4, {{0, 1, 1}, {1, 2, 3}, {2, 3, 2}, {3, 0, 3}});
  auto out = check_cycle(bad);
  REQUIRE(!out.pass);
  CHECK(violation_replays(bad, out.violations[0]));

  // Any triangle can be sorted into a valid labeling.
  WeightedGraph tri(3, {{0, 1, 3}, {1, 2, 1}, {0, 2, 2}});
  CHECK(check_cycle(tri).pass);

  // Chord rules: a chord at the cheap corner must match w_2 exactly.
  WeightedGraph chord_ok(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 0, 3}, {1, 3, 2}});
  CHECK(check_cycle(chord_ok).pass);
  WeightedGraph chord_bad(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 0, 3}, {1, 3, 1}});
  CHECK(!check_cycle(chord_bad).pass);
}

TEST_CASE("cycle labeling search is exhaustive over all cyclic orders") {
  // Independent oracle: try every permutation of the cycle's vertices that
  // traverses the same edge set, and evaluate the labeling rules directly.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    WeightedGraph g = random_graph(5, rng);
    auto out = check_cycle(g);
    for (const Cycle& c : enumerate_cycles(g)) {
      std::vector<int> perm = c.vertices;
      std::sort(perm.begin(), perm.end());
      std::vector<int> sorted_edges = c.cycle_edges;
      std::sort(sorted_edges.begin(), sorted_edges.end());
      bool oracle_pass = false;
      do {
        int m = static_cast<int>(perm.size());
        std::vector<int> edges;
        bool valid = true;
        for (int k = 0; k < m && valid; ++k) {
          int idx = g.edge_index(perm[k], perm[(k + 1) % m]);
          if (idx < 0) valid = false;
          else edges.push_back(idx);
        }
        if (!valid) continue;
        std::vector<int> se = edges;
        std::sort(se.begin(), se.end());
        if (se != sorted_edges) continue;
        Rational mhat = c.max_weight;
        bool cond = g.edge(edges[0]).weight <= g.edge(edges[1]).weight;
        for (int k = 2; k < m && cond; ++k) cond = g.edge(edges[k]).weight == mhat;
        for (int idx : c.chords) {
          if (!cond) break;
          const Edge& e = g.edge(idx);
          cond = e.incident(perm[1]) ? e.weight == g.edge(edges[1]).weight : e.weight == mhat;
        }
        if (cond) oracle_pass = true;
      } while (!oracle_pass && std::next_permutation(perm.begin(), perm.end()));

      bool impl_fails_here = false;
      for (const auto& v : out.violations)
        if (std::get<CycleWitness>(v.witness).vertices == c.vertices) impl_fails_here = true;
      CHECK(oracle_pass == !impl_fails_here);
    }
  }
}

TEST_CASE("pan condition") {
  // Constant cycle at the maximum: case (a).
  WeightedGraph a(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 4, 1}});
  CHECK(check_pan(a).pass);

  // Equal sub-maximum pair at the attach vertex, pendant of equal weight:
  // case (b) without the short-cut obligation.
  WeightedGraph b(5, {{0, 1, 1}, {0, 3, 1}, {1, 2, 2}, {2, 3, 2}, {0, 4, 1}});
  CHECK(check_pan(b).pass);

  // Strictly cheaper pendant and no {1,3} short-cut: violation.
  WeightedGraph c(5, {{0, 1, 1}, {0, 3, 1}, {1, 2, 2}, {2, 3, 2}, {0, 4, Rational(1, 2)}});
  auto out = check_pan(c);
  REQUIRE(!out.pass);
  CHECK(any_detail_contains(out, "{1,3}"));
  CHECK(violation_replays(c, out.violations[0]));

  // Adding the short-cut at maximum weight repairs the pan condition.
  WeightedGraph d(5,
                  {{0, 1, 1}, {0, 3, 1}, {1, 2, 2}, {2, 3, 2}, {0, 4, Rational(1, 2)}, {1, 3, 2}});
  CHECK(check_pan(d).pass);

  // Plain cycle, no path: vacuous.
  WeightedGraph e(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 2}, {3, 0, 2}});
  CHECK(check_pan(e).pass);
}

TEST_CASE("adjacent cycles condition") {
  // Two C4s glued along two sub-maximum edges: outright violation.
  WeightedGraph two(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 0, 2}, {2, 4, 2}, {4, 0, 2}});
  auto out = check_adjacent_cycles(two);
  REQUIRE(!out.pass);
  CHECK(any_detail_contains(out, "two common sub-maximum edges"));
  CHECK(violation_replays(two, out.violations[0]));

  // One shared sub-maximum edge with the adjacent equal-weight pattern.
  WeightedGraph one(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 0, 2}, {1, 4, 1}, {4, 5, 2},
                        {5, 0, 2}});
  CHECK(check_adjacent_cycles(one).pass);

  // Nested vertex sets fail premise (a): skipped.
  WeightedGraph k4(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  CHECK(check_adjacent_cycles(k4).pass);
}

TEST_CASE("reinforced cycle condition on the proof construction") {
  // Six-cycle with one cheap edge and a pendant at distance two.
  WeightedGraph fig(7, {{0, 1, 1}, {1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {4, 5, 2}, {5, 0, 2},
                        {3, 6, 2}});
  auto out = check_reinforced_cycle(fig);
  REQUIRE(!out.pass);
  CHECK(any_detail_contains(out, "{3,6}"));
  CHECK(any_detail_contains(out, "{3,4}"));
  for (const auto& v : out.violations) CHECK(violation_replays(fig, v));

  // Linking the pendant back to the cheap edge discharges that witness.
  WeightedGraph linked(7, {{0, 1, 1}, {1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {4, 5, 2}, {5, 0, 2},
                           {3, 6, 2}, {6, 0, 2}});
  auto out2 = check_reinforced_cycle(linked);
  CHECK(!any_detail_contains(out2, "{3,6}"));

  // Constant cycles carry no obligations.
  WeightedGraph flat(6, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {4, 5, 2}, {5, 0, 2}});
  CHECK(check_reinforced_cycle(flat).pass);

  // A five-cycle with one cheap edge satisfies the condition through its own
  // cycle edges; a six-cycle cannot reach the cheap edge from the far side.
  WeightedGraph c5(5, {{0, 1, 1}, {1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {4, 0, 2}});
  CHECK(check_reinforced_cycle(c5).pass);
  WeightedGraph c6(6, {{0, 1, 1}, {1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {4, 5, 2}, {5, 0, 2}});
  CHECK(!check_reinforced_cycle(c6).pass);
}

TEST_CASE("reinforced pan condition on the proof construction") {
  // Constant five-cycle, two-edge tail whose far edge is cheap: the two far
  // cycle vertices must reach the path and do not.
  WeightedGraph fig(7, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {4, 0, 2}, {0, 5, 2},
                        {5, 6, 1}});
  auto out = check_reinforced_pan(fig);
  REQUIRE(!out.pass);
  CHECK(any_detail_contains(out, "vertex 2"));
  CHECK(any_detail_contains(out, "vertex 3"));
  for (const auto& v : out.violations) CHECK(violation_replays(fig, v));

  // Sub-maximum pair at the attach vertex with both far vertices chorded to
  // it: the reinforced pan obligations are met.
  WeightedGraph fixed(6, {{0, 1, 2}, {0, 4, 2}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {0, 5, 1},
                          {0, 2, 2}, {0, 3, 2}});
  CHECK(check_reinforced_pan(fixed).pass);

  // No path edge below the cycle minimum: clause (a) never triggers.
  WeightedGraph vac(6, {{0, 1, 1}, {0, 4, 1}, {1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {0, 5, 1}});
  CHECK(check_reinforced_pan(vac).pass);
}

TEST_CASE("reinforced adjacent cycles condition on the proof constructions") {
  // Two C4s sharing a cheap pair, private vertices unjoined.
  WeightedGraph fig4(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 0, 2}, {2, 4, 2}, {4, 0, 2}});
  auto out = check_reinforced_adjacent_cycles(fig4);
  REQUIRE(!out.pass);
  CHECK(violation_replays(fig4, out.violations[0]));
  WeightedGraph fig4b(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 0, 2}, {2, 4, 2}, {4, 0, 2},
                          {3, 4, 2}});
  CHECK(check_reinforced_adjacent_cycles(fig4b).pass);

  // Two C5s glued along a three-edge path with a cheap middle edge.
  WeightedGraph fig5(6, {{0, 1, 2}, {1, 2, 1}, {2, 3, 2}, {3, 4, 2}, {4, 0, 2}, {3, 5, 2},
                         {5, 0, 2}});
  auto out5 = check_reinforced_adjacent_cycles(fig5);
  REQUIRE(!out5.pass);
  CHECK(any_detail_contains(out5, "private vertices 4, 5"));
  CHECK(violation_replays(fig5, out5.violations[0]));
  WeightedGraph fig5b(6, {{0, 1, 2}, {1, 2, 1}, {2, 3, 2}, {3, 4, 2}, {4, 0, 2}, {3, 5, 2},
                          {5, 0, 2}, {4, 5, 2}});
  CHECK(check_reinforced_adjacent_cycles(fig5b).pass);

  // Pairs sharing only maximum-weight edges have no premise.
  WeightedGraph maxonly(5, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 0, 2}, {2, 4, 2}, {4, 0, 2}});
  CHECK(check_reinforced_adjacent_cycles(maxonly).pass);
}

TEST_CASE("check_all aggregates and exposes the sub-bundles") {
  // Branching tree with the 1,2,2 star: everything passes, cycle machinery
  // is vacuous.
  WeightedGraph tree(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 2}});
  ConditionReport r = check_all(tree);
  CHECK(r.all_pass());
  CHECK(r.fconvexity_bundle_pass());
  CHECK(r.cycle_free_bundle_pass());
  CHECK(r.stats.cycles == 0);
  CHECK(r.stats.pans == 0);

  WeightedGraph badstar(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}});
  ConditionReport r2 = check_all(badstar);
  CHECK(!r2.all_pass());
  CHECK(!r2.cycle_free_bundle_pass());
  CHECK(!r2.outcome(ConditionId::star).pass);
  CHECK(r2.outcome(ConditionId::path).pass);

  WeightedGraph fig(7, {{0, 1, 1}, {1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {4, 5, 2}, {5, 0, 2},
                        {3, 6, 2}});
  ConditionReport r3 = check_all(fig);
  CHECK(!r3.all_pass());
  CHECK(r3.fconvexity_bundle_pass());  // only the reinforced cycle condition fails
  CHECK(!r3.outcome(ConditionId::reinforced_cycle).pass);
}

TEST_CASE("deleting cycles makes the cycle-based checks vacuous") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    WeightedGraph g = random_graph(6, rng);
    // Keep a spanning forest.
    std::vector<int> comp(6);
    for (int i = 0; i < 6; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int x) {
      return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
      if (find(e.u) != find(e.v)) {
        comp[find(e.u)] = find(e.v);
        kept.push_back(e);
      }
    }
    WeightedGraph forest(6, kept);
    ConditionReport r = check_all(forest);
    CHECK(r.stats.cycles == 0);
    for (ConditionId id : {ConditionId::cycle, ConditionId::pan, ConditionId::adjacent_cycles,
                           ConditionId::reinforced_cycle, ConditionId::reinforced_pan,
                           ConditionId::reinforced_adjacent_cycles})
      CHECK(r.outcome(id).pass);
  }
}

TEST_CASE("witness replay across a random violating corpus") {
  std::mt19937_64 rng(61);
  int replayed = 0;
  for (int trial = 0; trial < 40; ++trial) {
    WeightedGraph g = random_graph(5 + static_cast<int>(rng() % 2), rng);
    ConditionReport r = check_all(g);
    for (const auto& o : r.outcomes)
      for (const auto& v : o.violations) {
        CHECK(violation_replays(g, v));
        ++replayed;
      }
  }
  CHECK(replayed > 50);  // the corpus actually exercised replay
}

TEST_CASE("reports are deterministic") {
  std::mt19937_64 rng(67);
  WeightedGraph g = random_graph(6, rng);
  CHECK(conditions_report_json(g, check_all(g)) == conditions_report_json(g, check_all(g)));
}

TEST_CASE("first-witness mode and violation caps") {
  // A star with five pairwise-distinct weights: every triple violates.
  WeightedGraph g(6, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {0, 4, 4}, {0, 5, 5}});
  CheckOptions first;
  first.first_witness_only = true;
  auto out = check_star(g, first);
  CHECK(!out.pass);
  CHECK(out.violations.size() == 1);
  CHECK(out.truncated);

  CheckOptions capped;
  capped.max_violations = 3;
  auto out2 = check_star(g, capped);
  CHECK(out2.violations.size() == 3);
  CHECK(out2.truncated);

  auto all = check_star(g);
  CHECK(all.violations.size() == 10);  // C(5,3) triples, all violating
}

TEST_CASE("enumeration caps mark conditions as capped in check_all") {
  std::vector<Edge> edges;
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) edges.push_back({u, v, 1});
  WeightedGraph k8(8, edges);
  CheckOptions opts;
  opts.limits.max_cycles = 10;
  ConditionReport r = check_all(k8, opts);
  CHECK(r.caps_hit);
  CHECK(r.outcome(ConditionId::cycle).capped);
  CHECK(!r.outcome(ConditionId::star).capped);
  CHECK(!r.all_pass());

  CHECK_THROWS_AS(check_cycle(k8, opts), resource_limit_error);
}
