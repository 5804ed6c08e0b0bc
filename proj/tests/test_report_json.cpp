#include "doctest.h"

#include "wsat/generators.hpp"
#include "wsat/io.hpp"
#include "wsat/percolation.hpp"
#include "wsat/report_json.hpp"

using namespace wsat;

TEST_CASE("wsat report carries a re-checkable certificate") {
  const auto r = wsat_bnb(make_clique(6), PatternFamily({make_dumbbell(3)}));
  const auto j = to_json(r);
  CHECK(j["value"] == 6);
  CHECK(j["exact"] == true);
  const auto cert = hypergraph_from_json(j["certificate"]);
  CHECK(is_weakly_saturated(make_clique(6), cert, PatternFamily({make_dumbbell(3)})));
  CHECK(to_json(r).dump() == to_json(wsat_bnb(make_clique(6), PatternFamily({make_dumbbell(3)}))).dump());
}

TEST_CASE("closure and verification reports") {
  const UniformHypergraph star(2, 4, {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}});
  const auto c = to_json(closure(make_clique(4), star, PatternFamily({make_clique(3)})));
  CHECK(c["percolated"] == true);
  CHECK(c["trace"].size() == 3);
  CHECK(c["trace"][0]["edge"] == nlohmann::json::array({1, 2}));

  const FreeMatroid free(6);
  const auto v = to_json(verify_weakly_saturated(free, GroundSet(make_clique(4)), PatternFamily({make_clique(3)})));
  CHECK(v["verified"] == false);
  CHECK(v.contains("counterexample"));
}

TEST_CASE("small records") {
  CHECK(to_json(sharpness(make_clique(3)))["sharpness"] == 2);
  const auto fit = to_json(affine_tail_fit({{1, 2}, {2, 4}, {3, 6}}));
  CHECK(fit["slope"] == 2);
  CHECK(fit["valid"] == true);
}
