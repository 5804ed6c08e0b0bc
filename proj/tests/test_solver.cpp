#include "doctest.h"

#include <random>

#include "support.hpp"
#include "wsat/count_matroid.hpp"
#include "wsat/error.hpp"
#include "wsat/generators.hpp"
#include "wsat/linear_matroid.hpp"
#include "wsat/percolation.hpp"
#include "wsat/solver.hpp"

using namespace wsat;
namespace wt = wsat::testing;

TEST_CASE("exhaustive values") {
  CHECK(wsat_exhaustive(make_clique(5), PatternFamily({make_clique(3)})).value == 4);
  CHECK(wsat_exhaustive(make_clique(5, 3), PatternFamily({make_clique(4, 3)})).value == 6);
  CHECK(wsat_exhaustive(make_clique(4), PatternFamily({make_clique(4)})).value == 5);
  const auto r = wsat_exhaustive(make_clique(4), PatternFamily({make_clique(3)}));
  CHECK(r.exact);
  CHECK(r.method == "exhaustive");
  CHECK(r.certificate.instance_count() == 3);
  CHECK(is_weakly_saturated(make_clique(4), r.certificate, PatternFamily({make_clique(3)})));
  CHECK_THROWS_AS(wsat_exhaustive(make_clique(6), PatternFamily({make_clique(3)})), InvalidInput);
}

TEST_CASE("branch and bound values") {
  const auto b = wsat_bnb(make_clique(6), PatternFamily({make_dumbbell(3)}));
  CHECK(b.exact);
  CHECK(b.value == 6);
  const auto k = wsat_bnb(make_clique(6), PatternFamily({make_clique(3)}));
  CHECK(k.value == 5);
  CHECK(k.lower == 5);
  CHECK(k.upper == 5);
}

TEST_CASE("greedy upper bounds") {
  const auto b = greedy_upper(make_clique(6), PatternFamily({make_dumbbell(3)}));
  CHECK(b.upper == 6);
  const auto k = greedy_upper(make_clique(6), PatternFamily({make_clique(3)}));
  CHECK(k.upper <= 12);
  CHECK(is_weakly_saturated(make_clique(6), k.certificate, PatternFamily({make_clique(3)})));
  const auto unpruned = greedy_upper(make_clique(6), PatternFamily({make_clique(3)}), UpperStrategy::kConstructions);
  CHECK(unpruned.upper >= k.upper);
  const auto h = greedy_upper(make_clique(6, 3), PatternFamily({make_clique(4, 3)}));
  CHECK(is_weakly_saturated(make_clique(6, 3), h.certificate, PatternFamily({make_clique(4, 3)})));
  CHECK(h.upper >= 10);
}

TEST_CASE("branch and bound agrees with exhaustive search and brute force") {
  std::mt19937_64 rng(53);
  const std::vector<std::vector<UniformHypergraph>> families = {
      {make_clique(3)}, {make_cycle(4)}, {make_clique(4)}, {make_dumbbell(3)}, {make_clique(3), make_cycle(4)}};
  for (int trial = 0; trial < 30; ++trial) {
    const auto host = wt::random_subgraph(make_clique(6), 0.75, rng);
    if (host.instance_count() > kExhaustiveInstanceCap) continue;
    const auto& fam = families[static_cast<std::size_t>(trial) % families.size()];
    const PatternFamily family(fam);
    const auto ex = wsat_exhaustive(host, family);
    const auto bb = wsat_bnb(host, family);
    CHECK(ex.value == bb.value);
    CHECK(bb.exact);
    CHECK(ex.value == wt::brute_wsat_simple(host, fam));
    CHECK(greedy_upper(host, family).upper >= ex.value);
  }
}

TEST_CASE("multigraph hosts") {
  std::mt19937_64 rng(59);
  const PatternFamily fam = lift_family(make_clique(3), 2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto host = wt::random_subgraph(with_multiplicity(make_clique(4), 2), 0.9, rng, true);
    if (host.instance_count() > kExhaustiveInstanceCap) continue;
    CHECK(wsat_exhaustive(host, fam).value == wsat_bnb(host, fam).value);
  }
}

TEST_CASE("verified matroids prune but never change the value") {
  const auto k6 = make_clique(6);
  const GroundSet g(k6);
  const LinearMatroid hc(g, hyperconnectivity(6, 1, PrimeField::kDefaultPrime, 1));
  const FreeMatroid free(g.size());
  const MatroidOracle* oracles[] = {&hc, &free};
  const auto r = wsat_bnb(k6, PatternFamily({make_clique(3)}), oracles);
  CHECK(r.value == 5);
  CHECK(r.method == "bounds-met");
  REQUIRE(r.lower_bounds.size() == 2);
  CHECK(r.lower_bounds[0].verified);
  CHECK(r.lower_bounds[0].rank == 5);
  CHECK_FALSE(r.lower_bounds[1].verified);

  const MatroidOracle* unverified[] = {&free};
  CHECK(wsat_bnb(k6, PatternFamily({make_clique(3)}), unverified).value == 5);
}

TEST_CASE("bounds mode") {
  const auto k8x4 = with_multiplicity(make_clique(8), 4);
  const GroundSet g(k8x4);
  const CountMatroid cm(g, 6);
  const MatroidOracle* oracles[] = {&cm};
  const auto r = wsat_bounds(k8x4, lift_family(make_dumbbell(4), 4), oracles);
  CHECK(r.lower <= r.upper);
  CHECK(is_weakly_saturated(k8x4, r.certificate, lift_family(make_dumbbell(4), 4)));
}

TEST_CASE("timeouts report an interval") {
  const auto host = make_clique(7);
  SolverOptions opts;
  opts.timeout_seconds = 1e-9;
  const auto r = wsat_bnb(host, PatternFamily({make_cycle(5)}), {}, opts);
  CHECK(r.lower <= r.upper);
  if (!r.exact) {
    CHECK(r.timed_out);
    CHECK(r.value == r.upper);
  }
  CHECK(is_weakly_saturated(host, r.certificate, PatternFamily({make_cycle(5)})));
}

TEST_CASE("pruning rule (a) is sound") {
  std::mt19937_64 rng(61);
  const PatternFamily fam({make_clique(3)});
  for (int trial = 0; trial < 30; ++trial) {
    const auto host = make_clique(6);
    const auto sup = wt::random_subgraph(host, 0.6, rng);
    if (is_weakly_saturated(host, sup, fam)) continue;
    const auto sub = wt::random_subgraph(sup, 0.7, rng);
    CHECK_FALSE(is_weakly_saturated(host, sub, fam));
  }
}
