#include "wsat/generators.hpp"

#include <string>
#include <vector>

#include "wsat/error.hpp"

namespace wsat {

namespace {

void append_clique(std::vector<Edge>& out, Vertex first, Vertex n, int r) {
  // Enumerate r-subsets of [first, first + n) in colex order via rank.
  const std::uint64_t total = binomial(n, r);
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    Edge local = Edge::from_colex_rank(rank, r);
    std::vector<Vertex> shifted(local.vertices().begin(), local.vertices().end());
    for (Vertex& v : shifted) v += first;
    out.emplace_back(shifted);
  }
}

}  // namespace

UniformHypergraph make_clique(Vertex n, int r) {
  if (r < 2) throw InvalidInput("clique uniformity must be at least 2");
  if (n < static_cast<Vertex>(r)) {
    throw InvalidInput("clique needs n >= r (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  }
  std::vector<Edge> edges;
  edges.reserve(binomial(n, r));
  append_clique(edges, 0, n, r);
  return UniformHypergraph(r, n, std::move(edges));
}

UniformHypergraph make_dumbbell(Vertex k) {
  if (k < 3) throw InvalidInput("dumbbell needs k >= 3");
  std::vector<Edge> edges;
  append_clique(edges, 0, k, 2);
  append_clique(edges, k, k, 2);
  edges.push_back(Edge{0, k});
  return UniformHypergraph(2, 2 * k, std::move(edges));
}

UniformHypergraph make_biclique(Vertex s, Vertex t) {
  if (s == 0 || t == 0) throw InvalidInput("biclique parts must be nonempty");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < s; ++a)
    for (Vertex b = 0; b < t; ++b) edges.push_back(Edge{a, s + b});
  return UniformHypergraph(2, s + t, std::move(edges));
}

UniformHypergraph make_cycle(Vertex length) {
  if (length < 3) throw InvalidInput("cycle needs length >= 3");
  return make_tight_cycle(length, 2);
}

UniformHypergraph make_tight_cycle(Vertex v, int r) {
  if (r < 2 || v <= static_cast<Vertex>(r)) throw InvalidInput("tight cycle needs v > r >= 2");
  std::vector<Edge> edges;
  for (Vertex start = 0; start < v; ++start) {
    std::vector<Vertex> e;
    for (int j = 0; j < r; ++j) e.push_back((start + static_cast<Vertex>(j)) % v);
    edges.emplace_back(e);
  }
  return UniformHypergraph(r, v, std::move(edges));
}

UniformHypergraph with_multiplicity(const UniformHypergraph& g, Multiplicity k) {
  if (!g.is_simple()) throw InvalidInput("with_multiplicity expects a simple hypergraph");
  if (k == 0) throw InvalidInput("multiplicity must be positive");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  return UniformHypergraph(g.uniformity(), g.vertex_count(), std::move(edges),
                           std::vector<Multiplicity>(g.edge_count(), k));
}

PatternFamily lift_family(const UniformHypergraph& f, Multiplicity k) {
  if (!f.is_simple()) throw InvalidInput("lift_family expects a simple pattern");
  if (f.empty()) throw InvalidInput("lift_family expects a pattern with at least one edge");
  if (k == 0) throw InvalidInput("lift multiplicity must be positive");
  std::vector<UniformHypergraph> patterns;
  std::vector<std::string> labels;
  const std::vector<Edge> edges(f.edges().begin(), f.edges().end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<Multiplicity> mult(edges.size(), k);
    mult[i] = 1;
    patterns.emplace_back(f.uniformity(), f.vertex_count(), edges, std::move(mult));
    labels.push_back("lift(k=" + std::to_string(k) + ",e=" + edges[i].to_string() + ")");
  }
  return PatternFamily(std::move(patterns), std::move(labels));
}

UniformHypergraph disjoint_union(std::span<const UniformHypergraph> parts) {
  if (parts.empty()) throw InvalidInput("disjoint union of nothing");
  const int r = parts.front().uniformity();
  std::vector<Edge> edges;
  std::vector<Multiplicity> mult;
  Vertex offset = 0;
  for (const auto& part : parts) {
    if (part.uniformity() != r) throw InvalidInput("disjoint union mixes uniformities");
    for (std::size_t i = 0; i < part.edge_count(); ++i) {
      std::vector<Vertex> shifted(part.edges()[i].vertices().begin(), part.edges()[i].vertices().end());
      for (Vertex& v : shifted) v += offset;
      edges.emplace_back(shifted);
      mult.push_back(part.multiplicity(i));
    }
    offset += part.vertex_count();
  }
  return UniformHypergraph(r, offset, std::move(edges), std::move(mult));
}

UniformHypergraph underlying_simple(const UniformHypergraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  return UniformHypergraph(g.uniformity(), g.vertex_count(), std::move(edges));
}

}  // namespace wsat
