#include "doctest.h"

#include "wsat/count_matroid.hpp"
#include "wsat/error.hpp"
#include "wsat/experiments.hpp"
#include "wsat/generators.hpp"
#include "wsat/linear_matroid.hpp"

using namespace wsat;

TEST_CASE("affine tail fit") {
  std::vector<std::pair<std::int64_t, std::int64_t>> hc;
  for (Vertex n = 3; n <= 8; ++n) {
    const LinearMatroid m(GroundSet(make_clique(n)), hyperconnectivity(n, 1, PrimeField::kDefaultPrime, n));
    hc.emplace_back(n, static_cast<std::int64_t>(rank_full(m).rank));
  }
  const auto f1 = affine_tail_fit(hc);
  CHECK(f1.valid);
  CHECK(f1.slope == 1);
  CHECK(f1.intercept == -1);
  CHECK(f1.onset == 3);

  std::vector<std::pair<std::int64_t, std::int64_t>> cm;
  for (Vertex n = 3; n <= 8; ++n) {
    const CountMatroid m(GroundSet(with_multiplicity(make_clique(n), 3)), 3);
    cm.emplace_back(n, static_cast<std::int64_t>(rank_full(m).rank));
  }
  const auto f2 = affine_tail_fit(cm);
  CHECK(f2.valid);
  CHECK(f2.slope == 3);
  CHECK(f2.intercept == 0);

  const auto bad = affine_tail_fit({{1, 5}, {2, 5}, {3, 6}});
  CHECK_FALSE(bad.valid);
  CHECK(bad.onset == 2);

  const auto late = affine_tail_fit({{1, 0}, {2, 0}, {3, 1}, {4, 3}, {5, 5}, {6, 7}});
  CHECK(late.valid);
  CHECK(late.onset == 3);
  CHECK(late.slope == 2);
  CHECK(late.intercept == -5);

  CHECK_THROWS_AS(affine_tail_fit({{1, 1}, {2, 2}}), InvalidInput);
  CHECK_THROWS_AS(affine_tail_fit({{1, 1}, {2, 2}, {4, 4}}), InvalidInput);
}

TEST_CASE("random graphs") {
  CHECK(gnp_sample(5, 1.0, 1) == make_clique(5));
  CHECK(gnp_sample(5, 0.0, 1).empty());
  CHECK(gnp_sample(9, 0.5, 42) == gnp_sample(9, 0.5, 42));
  CHECK_THROWS_AS(gnp_sample(5, 1.5, 1), InvalidInput);
}

TEST_CASE("clique minus edge property") {
  CHECK(clique_minus_edge_property(make_clique(6), 3));
  CHECK_FALSE(clique_minus_edge_property(UniformHypergraph(2, 6), 3));
  // Path 0-1-2 alone: the pair {0, 2} has a common neighbour, {0, 1} does not.
  CHECK_FALSE(clique_minus_edge_property(UniformHypergraph(2, 3, {Edge{0, 1}, Edge{1, 2}}), 3));
  CHECK(clique_minus_edge_property(make_cycle(4), 3) == false);
}

TEST_CASE("remark check on complete graphs") {
  RemarkOptions opts;
  opts.trials = 3;
  opts.seed = 1;
  opts.threads = 2;
  const auto s = remark_check(6, 1.0, make_clique(3), opts);
  CHECK(s.wsat_kn == 5);
  for (const auto& t : s.trials) {
    CHECK(t.property_held);
    REQUIRE(t.wsat_gn);
    CHECK(*t.wsat_gn == 5);
  }
  CHECK(s.violations() == 0);
  const auto csv = remark_csv(s);
  CHECK(csv.rfind("seed,n,p,wsat_gn,wsat_kn,property_held\n", 0) == 0);
}

TEST_CASE("remark check is reproducible and order independent") {
  RemarkOptions one;
  one.trials = 6;
  one.seed = 7;
  RemarkOptions many = one;
  many.threads = 3;
  const auto a = remark_check(6, 0.9, make_clique(3), one);
  const auto b = remark_check(6, 0.9, make_clique(3), many);
  CHECK(remark_csv(a) == remark_csv(b));
}
