#include "doctest.h"

#include "wsat/count_matroid.hpp"
#include "wsat/error.hpp"
#include "wsat/generators.hpp"
#include "wsat/linear_matroid.hpp"
#include "wsat/matroid.hpp"
#include "wsat/percolation.hpp"

using namespace wsat;

namespace {

ElementSet all_of(std::size_t n) {
  ElementSet out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<ElementId>(i);
  return out;
}

UniformHypergraph two_triangles() {
  const UniformHypergraph parts[] = {make_clique(3), make_clique(3)};
  return disjoint_union(parts);
}

}  // namespace

TEST_CASE("rank of simple matroids") {
  const UniformMatroid u25(2, 5);
  const auto full = rank_full(u25);
  CHECK(full.rank == 2);
  CHECK(full.basis.size() == 2);
  CHECK(u25.is_independent(full.basis));

  CHECK(rank(u25, {}).rank == 0);
  CHECK_THROWS_AS(rank(u25, ElementSet{0, 0}), InvalidInput);
  CHECK_THROWS_AS(rank(u25, ElementSet{7}), InvalidInput);

  const auto k33 = with_multiplicity(make_clique(3), 3);
  const CountMatroid cm(GroundSet(k33), 3);
  CHECK(rank_full(cm).rank == 9);
}

TEST_CASE("cycles") {
  const UniformMatroid u23(2, 3);
  CHECK(is_cycle(u23, all_of(3)));
  CHECK_FALSE(is_cycle(UniformMatroid(3, 3), all_of(3)));
  CHECK_THROWS_AS(is_cycle(u23, {}), InvalidInput);

  // A lifted dumbbell copy with a single bridge instance in K_6^3.
  const auto host = with_multiplicity(make_clique(6), 3);
  const GroundSet ground(host);
  const CountMatroid cm(ground, 3);
  const PatternFamily lifted = lift_family(make_dumbbell(3), 3);
  const auto b = make_dumbbell(3);
  std::size_t bridge = 0;
  for (std::size_t i = 0; i < b.edge_count(); ++i)
    if (b.edges()[i] == Edge{0, 3}) bridge = i;
  const auto copy = with_multiplicity(b, 3);
  std::vector<Edge> edges(copy.edges().begin(), copy.edges().end());
  std::vector<Multiplicity> mult(copy.multiplicities().begin(), copy.multiplicities().end());
  mult[bridge] = 1;
  const ElementSet ids = ground.elements_of(UniformHypergraph(2, 6, edges, mult));
  CHECK(ids.size() == 19);
  CHECK(is_cycle(cm, ids));
}

TEST_CASE("weak saturation verification") {
  const auto k5 = make_clique(5);
  const GroundSet g5(k5);
  const LinearMatroid hc(g5, hyperconnectivity(5, 1, PrimeField::kDefaultPrime, 1));
  CHECK(verify_weakly_saturated(hc, g5, PatternFamily({make_clique(3)})).verified());
  CHECK(lower_bound(hc, g5, PatternFamily({make_clique(3)})) == 4);

  const auto k6 = make_clique(6);
  const GroundSet g6(k6);
  const LinearMatroid hc2(g6, hyperconnectivity(6, 2, PrimeField::kDefaultPrime, 2));
  CHECK(lower_bound(hc2, g6, PatternFamily({make_clique(4)})) == 9);

  const auto k63 = with_multiplicity(k6, 3);
  const GroundSet g63(k63);
  const CountMatroid cm(g63, 3);
  const PatternFamily lifted = lift_family(make_dumbbell(3), 3);
  const auto v = verify_weakly_saturated(cm, g63, lifted);
  CHECK(v.verified());
  CHECK(v.copies_checked == 1890);
  CHECK(lower_bound(cm, g63, lifted) == 18);

  const FreeMatroid free(g5.size());
  const auto bad = verify_weakly_saturated(free, g5, PatternFamily({make_clique(3)}));
  CHECK_FALSE(bad.verified());
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->elements == ElementSet{0, 1, 2});
  CHECK_THROWS_AS(certified_lower_bound(free, g5, PatternFamily({make_clique(3)})), VerificationFailure);

  VerifyOptions limited;
  limited.copy_limit = 2;
  const auto partial = verify_weakly_saturated(hc, g5, PatternFamily({make_clique(3)}), limited);
  CHECK(partial.all_cycles);
  CHECK_FALSE(partial.verified());
}

TEST_CASE("preservation on weakly saturated seeds") {
  const auto k6 = make_clique(6);
  const GroundSet g6(k6);
  const LinearMatroid hc(g6, hyperconnectivity(6, 1, PrimeField::kDefaultPrime, 4));
  CHECK(preservation_check(hc, g6, join_construction(6, make_clique(3))));
  CHECK(preservation_check(hc, g6, k6));

  const auto k63 = with_multiplicity(k6, 3);
  const GroundSet g63(k63);
  const CountMatroid cm(g63, 3);
  CHECK(preservation_check(cm, g63, with_multiplicity(two_triangles(), 3)));
}

TEST_CASE("restriction") {
  const UniformMatroid u35(3, 5);
  const RestrictedMatroid r(u35, {1, 3, 4});
  CHECK(r.ground_size() == 3);
  CHECK(rank_full(r).rank == 3);
  CHECK(r.parent_element(1) == 3);
  const auto k4 = make_clique(4);
  CHECK(elements_avoiding(GroundSet(k4), 0).size() == 3);
}
