#pragma once

#include <cstdint>
#include <span>

#include "wsat/hypergraph.hpp"

namespace wsat {

/// K_n^(r): all C(n, r) r-subsets of [0, n). Requires n >= r >= 2.
UniformHypergraph make_clique(Vertex n, int r = 2);

/// Two disjoint k-cliques on [0,k) and [k,2k) joined by the bridge {0, k}.
UniformHypergraph make_dumbbell(Vertex k);

/// K_{s,t} with parts [0,s) and [s,s+t).
UniformHypergraph make_biclique(Vertex s, Vertex t);

/// The graph cycle 0-1-...-(l-1)-0, l >= 3.
UniformHypergraph make_cycle(Vertex length);

/// Tight cyclic r-uniform cycle on [0, v): the v edges of r cyclically
/// consecutive vertices. Requires v > r.
UniformHypergraph make_tight_cycle(Vertex v, int r);

/// Every edge of a simple `g` repeated k times (G^k).
UniformHypergraph with_multiplicity(const UniformHypergraph& g, Multiplicity k);

/// {F_e^k : e in E(F)}: pattern i has multiplicity k on every edge except
/// edge i of F, which appears once. Patterns follow F's edge order.
PatternFamily lift_family(const UniformHypergraph& f, Multiplicity k);

/// Vertex-disjoint union; vertices of later parts are shifted past earlier ones.
UniformHypergraph disjoint_union(std::span<const UniformHypergraph> parts);

/// Simple hypergraph obtained by forgetting multiplicities.
UniformHypergraph underlying_simple(const UniformHypergraph& g);

}  // namespace wsat
