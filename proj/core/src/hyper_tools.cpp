#include "wsat/hyper_tools.hpp"

#include <algorithm>
#include <unordered_map>

#include "wsat/error.hpp"
#include "wsat/generators.hpp"

namespace wsat {

namespace {

// Calls fn(subset) for every size-t subset of the vertices of e, in
// lexicographic order of positions.
template <typename Fn>
void for_each_subset(const Edge& e, int t, Fn&& fn) {
  const int r = e.size();
  std::vector<int> pos(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) pos[static_cast<std::size_t>(i)] = i;
  std::vector<Vertex> sub(static_cast<std::size_t>(t));
  while (true) {
    for (int i = 0; i < t; ++i) sub[static_cast<std::size_t>(i)] = e[pos[static_cast<std::size_t>(i)]];
    fn(sub);
    int i = t - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == r - t + i) --i;
    if (i < 0) return;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
}

struct SubsetHash {
  std::size_t operator()(const std::vector<Vertex>& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : s) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

SharpnessWitness sharpness(const UniformHypergraph& f) {
  if (f.empty()) throw InvalidInput("sharpness of an edgeless hypergraph is undefined");
  const int r = f.uniformity();
  for (int t = 0; t <= r; ++t) {
    // Edges containing each t-subset. Multiplicity does not create other edges.
    std::unordered_map<std::vector<Vertex>, std::size_t, SubsetHash> containing;
    for (const Edge& e : f.edges()) for_each_subset(e, t, [&](const std::vector<Vertex>& s) { ++containing[s]; });
    for (const Edge& e : f.edges()) {
      std::optional<std::vector<Vertex>> found;
      for_each_subset(e, t, [&](const std::vector<Vertex>& s) {
        if (!found && containing[s] == 1) found = s;
      });
      if (found) return SharpnessWitness{t, e, *found};
    }
  }
  // t = r always succeeds: an edge is contained in no other edge.
  throw InvalidInput("sharpness search failed");
}

UniformHypergraph AppendixFamily::component(std::size_t i) const {
  if (i > added_edges.size()) throw InvalidInput("appendix component index out of range");
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  edges.insert(edges.end(), added_edges.begin(), added_edges.begin() + static_cast<std::ptrdiff_t>(i));
  return UniformHypergraph(uniformity, static_cast<Vertex>(component_vertices), std::move(edges));
}

AppendixFamily appendix_family(int r, Vertex v1, Vertex v2) {
  if (r < 3) throw InvalidInput("appendix family needs r >= 3");
  if (v1 < static_cast<Vertex>(2 * r - 1)) throw InvalidInput("appendix family needs v1 >= 2r - 1");
  if (v2 < static_cast<Vertex>(r + 1)) throw InvalidInput("appendix family needs v2 >= r + 1");

  AppendixFamily out;
  out.uniformity = r;
  out.v1 = v1;
  out.v2 = v2;
  out.component_vertices = v1 + v2;
  const UniformHypergraph parts[] = {make_tight_cycle(v1, r), make_clique(v2, r)};
  out.base = disjoint_union(parts);

  const UniformHypergraph all = make_clique(v1 + v2, r);
  for (const Edge& e : all.edges())
    if (!out.base.find(e)) out.added_edges.push_back(e);

  std::vector<Edge> edges;
  const Vertex block = v1 + v2;
  for (std::size_t i = 0; i < out.components(); ++i) {
    const Vertex offset = static_cast<Vertex>(i) * block;
    auto add_shifted = [&](const Edge& e) {
      std::vector<Vertex> vs(e.vertices().begin(), e.vertices().end());
      for (Vertex& v : vs) v += offset;
      edges.emplace_back(vs);
    };
    for (const Edge& e : out.base.edges()) add_shifted(e);
    for (std::size_t j = 0; j < i; ++j) add_shifted(out.added_edges[j]);
  }
  out.family = UniformHypergraph(r, static_cast<Vertex>(out.components()) * block, std::move(edges));
  return out;
}

std::int64_t clique_wsat_formula(std::int64_t n, std::int64_t r, std::int64_t s) {
  if (!(n >= s && s >= r && r >= 2)) throw InvalidInput("clique formula needs n >= s >= r >= 2");
  return static_cast<std::int64_t>(binomial(n, r)) - static_cast<std::int64_t>(binomial(n - s + r, r));
}

}  // namespace wsat
