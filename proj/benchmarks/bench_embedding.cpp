#include <benchmark/benchmark.h>

#include "wsat/edge_counts.hpp"
#include "wsat/embedding.hpp"
#include "wsat/generators.hpp"

namespace {

void BM_EnumerateDumbbells(benchmark::State& state) {
  const auto k = static_cast<wsat::Vertex>(state.range(0));
  const auto host = wsat::make_clique(2 * k + 1);
  const wsat::PatternMatcher matcher(wsat::make_dumbbell(k));
  const wsat::EdgeCounts counts(host);
  for (auto _ : state) {
    std::size_t copies = 0;
    matcher.for_each_copy(counts, [&](std::span<const wsat::Vertex>) {
      ++copies;
      return true;
    });
    benchmark::DoNotOptimize(copies);
  }
}
BENCHMARK(BM_EnumerateDumbbells)->DenseRange(3, 4);

void BM_AnchoredSearchMiss(benchmark::State& state) {
  const auto n = static_cast<wsat::Vertex>(state.range(0));
  std::vector<wsat::Edge> edges;
  for (wsat::Vertex v = 0; v + 1 < n; ++v) edges.push_back(wsat::Edge{v, v + 1});
  const wsat::UniformHypergraph path(2, n, edges);
  const wsat::PatternMatcher matcher(wsat::make_clique(4));
  const wsat::EdgeCounts counts(path);
  for (auto _ : state) {
    for (const auto& e : path.edges()) benchmark::DoNotOptimize(matcher.exists_through(counts, e));
  }
}
BENCHMARK(BM_AnchoredSearchMiss)->Arg(64)->Arg(512);

void BM_AutomorphismGroup(benchmark::State& state) {
  const auto k = static_cast<wsat::Vertex>(state.range(0));
  const auto pattern = wsat::make_dumbbell(k);
  for (auto _ : state) benchmark::DoNotOptimize(wsat::PatternMatcher(pattern).automorphism_count());
}
BENCHMARK(BM_AutomorphismGroup)->DenseRange(3, 5);

}  // namespace
