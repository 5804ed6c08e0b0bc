#include <benchmark/benchmark.h>

#include "wsat/generators.hpp"
#include "wsat/percolation.hpp"

namespace {

void BM_ClosureStarTriangles(benchmark::State& state) {
  const auto n = static_cast<wsat::Vertex>(state.range(0));
  const auto host = wsat::make_clique(n);
  std::vector<wsat::Edge> star;
  for (wsat::Vertex v = 1; v < n; ++v) star.push_back(wsat::Edge{0, v});
  const wsat::UniformHypergraph start(2, n, star);
  const wsat::FamilyMatcher fm(wsat::PatternFamily({wsat::make_clique(3)}));
  for (auto _ : state) benchmark::DoNotOptimize(wsat::closure(host, start, fm));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosureStarTriangles)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_ClosureLiftedDumbbell(benchmark::State& state) {
  const auto host = wsat::with_multiplicity(wsat::make_clique(6), 3);
  const wsat::UniformHypergraph parts[] = {wsat::make_clique(3), wsat::make_clique(3)};
  const auto start = wsat::with_multiplicity(wsat::disjoint_union(parts), 3);
  const wsat::FamilyMatcher fm(wsat::lift_family(wsat::make_dumbbell(3), 3));
  for (auto _ : state) benchmark::DoNotOptimize(wsat::is_weakly_saturated(host, start, fm));
}
BENCHMARK(BM_ClosureLiftedDumbbell);

void BM_ClosureHyperConstruction(benchmark::State& state) {
  const auto n = static_cast<wsat::Vertex>(state.range(0));
  const auto k43 = wsat::make_clique(4, 3);
  const auto host = wsat::make_clique(n, 3);
  const auto start = wsat::hyper_construction(n, k43, 3);
  const wsat::FamilyMatcher fm(wsat::PatternFamily({k43}));
  for (auto _ : state) benchmark::DoNotOptimize(wsat::is_weakly_saturated(host, start, fm));
}
BENCHMARK(BM_ClosureHyperConstruction)->DenseRange(6, 12, 3);

}  // namespace
