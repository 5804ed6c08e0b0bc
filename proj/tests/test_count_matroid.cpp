#include "doctest.h"

#include <random>

#include "wsat/count_matroid.hpp"
#include "wsat/error.hpp"
#include "wsat/generators.hpp"

using namespace wsat;

namespace {

UniformHypergraph bowtie() {
  return UniformHypergraph(2, 5, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}, Edge{0, 3}, Edge{0, 4}, Edge{3, 4}});
}

ElementSet all_of(std::size_t n) {
  ElementSet out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<ElementId>(i);
  return out;
}

}  // namespace

TEST_CASE("independence examples") {
  const auto k33 = with_multiplicity(make_clique(3), 3);
  const CountMatroid q3(GroundSet(k33), 3);
  CHECK(q3.is_independent(all_of(9)));

  const UniformHypergraph extra(2, 3, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}}, {4, 3, 3});
  const CountMatroid q3x(GroundSet(extra), 3);
  CHECK_FALSE(q3x.is_independent(all_of(10)));
  CHECK(brute_force_rank(q3x, all_of(10)) == 9);
  CHECK(rank_full(q3x).rank == 9);

  const CountMatroid q1(GroundSet(bowtie()), 1);
  CHECK(q1.is_independent(ElementSet{0, 1, 2}));
  CHECK_FALSE(q1.is_independent(all_of(6)));
  CHECK(brute_force_rank(q1, all_of(6)) == 5);
  CHECK(brute_force_rank(q1, {}) == 0);
}

TEST_CASE("clique capacity makes the k-fold clique a basis") {
  for (std::uint32_t k = 2; k <= 5; ++k) {
    const auto kk = with_multiplicity(make_clique(k), k);
    const auto m = CountMatroid::for_clique_size(GroundSet(kk), k);
    CHECK(m.capacity() == k * (k - 1) / 2);
    CHECK(m.is_independent(all_of(kk.instance_count())));
  }
}

TEST_CASE("matching oracle agrees with the literal count condition") {
  std::mt19937_64 rng(41);
  for (std::uint32_t q : {1u, 2u, 3u, 6u}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Edge> edges;
      std::vector<Multiplicity> mult;
      std::size_t total = 0;
      const auto k5 = make_clique(5);
      for (const Edge& e : k5.edges()) {
        if (rng() % 2 || total >= 16) continue;
        const Multiplicity m = 1 + static_cast<Multiplicity>(rng() % 3);
        edges.push_back(e);
        mult.push_back(m);
        total += m;
      }
      const CountMatroid cm(GroundSet(UniformHypergraph(2, 5, edges, mult)), q);
      const ElementSet all = all_of(total);
      CHECK(cm.is_independent(all) == satisfies_count_condition(cm, all));
      CHECK(cm.basis(all).size() == brute_force_rank(cm, all));
      const auto co = cm.coloops(all);
      const std::size_t r = brute_force_rank(cm, all);
      for (std::size_t i = 0; i < all.size(); ++i) {
        ElementSet rest;
        for (std::size_t j = 0; j < all.size(); ++j)
          if (j != i) rest.push_back(all[j]);
        CHECK(co[i] == (brute_force_rank(cm, rest) < r));
      }
    }
  }
}

TEST_CASE("brute force caps its input") {
  const auto big = with_multiplicity(make_clique(4), 4);
  const CountMatroid cm(GroundSet(big), 3);
  CHECK_THROWS_AS(brute_force_rank(cm, all_of(24)), InvalidInput);
}

TEST_CASE("rank of cliques under q = 3") {
  for (Vertex n = 3; n <= 8; ++n) {
    const auto g = with_multiplicity(make_clique(n), 3);
    const CountMatroid cm(GroundSet(g), 3);
    CHECK(rank_full(cm).rank == 3 * n);
  }
}
