#include <benchmark/benchmark.h>

#include "gridlock/io.hpp"
#include "gridlock/verifier.hpp"

using namespace gridlock;

namespace {

WeightedGraph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1 + ((u + v) % 3)});
  return WeightedGraph(n, edges);
}

void EnumerateCycles(benchmark::State& state) {
  WeightedGraph g = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cycles = enumerate_cycles(g);
    benchmark::DoNotOptimize(cycles);
  }
}
BENCHMARK(EnumerateCycles)->DenseRange(5, 8);

void PminPartitions(benchmark::State& state) {
  WeightedGraph g = generate_graph({static_cast<int>(state.range(0)), 0.5, {1, 2, 3}, 7});
  for (auto _ : state) {
    for (mask_t a = 0; a <= full_mask(g.vertex_count()); ++a) {
      Partition p = tilde_p_min(g, a);
      benchmark::DoNotOptimize(p);
    }
  }
}
BENCHMARK(PminPartitions)->DenseRange(8, 12, 2);

void RestrictedGameBuild(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  WeightedGraph g = generate_graph({n, 0.5, {1, 2, 3}, 11});
  UnanimityGame u(n, 0b11);
  for (auto _ : state) {
    TableGame t = restricted_game(g, CorrespondenceKind::tpmin, u);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(RestrictedGameBuild)->DenseRange(8, 12, 2);

void ConvexityCheck(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  WeightedGraph g = generate_graph({n, 0.5, {1, 2, 3}, 13});
  TableGame t = restricted_game(g, CorrespondenceKind::tpmin, UnanimityGame(n, 0b11));
  for (auto _ : state) {
    auto r = is_convex(t);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(ConvexityCheck)->DenseRange(8, 12, 2);

void ConditionsCheckAll(benchmark::State& state) {
  WeightedGraph g = generate_graph({static_cast<int>(state.range(0)), 0.5, {1, 2, 3}, 17});
  for (auto _ : state) {
    ConditionReport r = check_all(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(ConditionsCheckAll)->DenseRange(6, 10, 2);

void CrossValidate(benchmark::State& state) {
  WeightedGraph g = generate_graph({static_cast<int>(state.range(0)), 0.5, {1, 2, 3}, 19});
  for (auto _ : state) {
    CrossValidation cv = cross_validate(g);
    benchmark::DoNotOptimize(cv);
  }
}
BENCHMARK(CrossValidate)->DenseRange(5, 7);

}  // namespace

BENCHMARK_MAIN();
