#include <benchmark/benchmark.h>

#include "wsat/count_matroid.hpp"
#include "wsat/generators.hpp"
#include "wsat/linear_matroid.hpp"

namespace {

void BM_CountMatroidRank(benchmark::State& state) {
  const auto n = static_cast<wsat::Vertex>(state.range(0));
  const auto k = static_cast<wsat::Multiplicity>(state.range(1));
  const auto host = wsat::with_multiplicity(wsat::make_clique(n), k);
  const auto cm = wsat::CountMatroid::for_clique_size(wsat::GroundSet(host), k);
  for (auto _ : state) benchmark::DoNotOptimize(wsat::rank_full(cm));
  state.counters["elements"] = static_cast<double>(host.instance_count());
}
BENCHMARK(BM_CountMatroidRank)->Args({6, 3})->Args({10, 5})->Args({16, 5});

void BM_CountMatroidColoops(benchmark::State& state) {
  const auto host = wsat::with_multiplicity(wsat::make_clique(10), 5);
  const auto cm = wsat::CountMatroid::for_clique_size(wsat::GroundSet(host), 5);
  wsat::ElementSet subset;
  for (wsat::ElementId e = 0; e < 101; ++e) subset.push_back(e);
  for (auto _ : state) benchmark::DoNotOptimize(cm.coloops(subset));
}
BENCHMARK(BM_CountMatroidColoops);

void BM_HyperconnectivityRank(benchmark::State& state) {
  const auto n = static_cast<wsat::Vertex>(state.range(0));
  const wsat::LinearMatroid m(wsat::GroundSet(wsat::make_clique(n)), wsat::hyperconnectivity(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(wsat::rank_full(m));
}
BENCHMARK(BM_HyperconnectivityRank)->Arg(8)->Arg(16);

}  // namespace
