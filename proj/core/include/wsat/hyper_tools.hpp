#pragma once

#include <cstdint>
#include <vector>

#include "wsat/hypergraph.hpp"

namespace wsat {

/// s(F): the least |S| such that S is a subset of some edge e and of no other
/// edge, with the witnessing (e, S).
struct SharpnessWitness {
  int value = 0;
  Edge edge;
  std::vector<Vertex> subset;  // sorted, size == value
};

/// Exact sharpness by increasing subset size. Throws InvalidInput on an
/// edgeless F. The witness edge is the first in colex order.
SharpnessWitness sharpness(const UniformHypergraph& f);

/// The hypergraph F(v1, v2) and its construction record.
struct AppendixFamily {
  int uniformity = 3;
  Vertex v1 = 0;
  Vertex v2 = 0;
  UniformHypergraph base;                 // F_0: tight v1-cycle plus K_{v2}^(r)
  std::vector<Edge> added_edges;          // e_1..e_m on V(F_0), colex order
  UniformHypergraph family;               // disjoint union of F_0..F_m
  std::size_t component_vertices = 0;     // v1 + v2; F_i occupies block i

  std::size_t components() const noexcept { return added_edges.size() + 1; }
  /// F_i on its own vertex set [0, v1 + v2).
  UniformHypergraph component(std::size_t i) const;
};

/// Requires r >= 3, v1 >= 2r - 1, v2 >= r + 1.
AppendixFamily appendix_family(int r, Vertex v1, Vertex v2);

/// C(n, r) - C(n - s + r, r), binomials with negative tops read as 0.
/// Requires n >= s >= r >= 2.
std::int64_t clique_wsat_formula(std::int64_t n, std::int64_t r, std::int64_t s);

}  // namespace wsat
