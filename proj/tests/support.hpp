#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond the data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "wsat/hypergraph.hpp"

namespace wsat::testing {

using Counts = std::map<std::vector<Vertex>, std::uint32_t>;

inline Counts counts_of(const UniformHypergraph& g) {
  Counts c;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto vs = g.edges()[i].vertices();
    c[std::vector<Vertex>(vs.begin(), vs.end())] = g.multiplicity(i);
  }
  return c;
}

inline std::vector<Vertex> image_of(const Edge& e, const std::vector<Vertex>& map) {
  std::vector<Vertex> out;
  for (Vertex v : e.vertices()) out.push_back(map[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// Calls fn(map) for every injective map [0, v) -> [0, n).
template <typename Fn>
void for_each_injection(Vertex v, Vertex n, Fn&& fn) {
  if (v > n) return;
  std::vector<Vertex> map(v);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, Vertex i) -> void {
    if (i == v) {
      fn(map);
      return;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      map[i] = x;
      self(self, i + 1);
      used[x] = false;
    }
  };
  rec(rec, 0);
}

inline bool is_copy(const Counts& host, const UniformHypergraph& pattern, const std::vector<Vertex>& map) {
  for (std::size_t i = 0; i < pattern.edge_count(); ++i) {
    auto it = host.find(image_of(pattern.edges()[i], map));
    if (it == host.end() || it->second < pattern.multiplicity(i)) return false;
  }
  return true;
}

inline bool brute_copy_through(const Counts& host, Vertex n, const UniformHypergraph& pattern,
                               const std::vector<Vertex>& anchor) {
  bool found = false;
  for_each_injection(pattern.vertex_count(), n, [&](const std::vector<Vertex>& map) {
    if (found || !is_copy(host, pattern, map)) return;
    for (const Edge& e : pattern.edges())
      if (image_of(e, map) == anchor) found = true;
  });
  return found;
}

// Distinct copies as distinct sets of (image edge, multiplicity) pairs.
inline std::size_t brute_copy_count(const UniformHypergraph& host, const UniformHypergraph& pattern) {
  const Counts c = counts_of(host);
  std::set<std::vector<std::pair<std::vector<Vertex>, std::uint32_t>>> seen;
  for_each_injection(pattern.vertex_count(), host.vertex_count(), [&](const std::vector<Vertex>& map) {
    if (!is_copy(c, pattern, map)) return;
    std::vector<std::pair<std::vector<Vertex>, std::uint32_t>> key;
    for (std::size_t i = 0; i < pattern.edge_count(); ++i)
      key.emplace_back(image_of(pattern.edges()[i], map), pattern.multiplicity(i));
    std::sort(key.begin(), key.end());
    seen.insert(key);
  });
  return seen.size();
}

// Bootstrap closure by repeated full scans with brute-force copy search.
inline Counts brute_closure(const UniformHypergraph& host, const UniformHypergraph& start,
                            const std::vector<UniformHypergraph>& family) {
  const Counts target = counts_of(host);
  Counts state = counts_of(start);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [edge, mult] : target) {
      while (state[edge] < mult) {
        ++state[edge];
        bool ok = false;
        for (const auto& f : family) ok = ok || brute_copy_through(state, host.vertex_count(), f, edge);
        if (!ok) {
          --state[edge];
          break;
        }
        changed = true;
      }
    }
  }
  for (auto it = state.begin(); it != state.end();) it = it->second == 0 ? state.erase(it) : std::next(it);
  return state;
}

// Smallest percolating subset of a simple host by subset enumeration.
inline std::size_t brute_wsat_simple(const UniformHypergraph& host, const std::vector<UniformHypergraph>& family) {
  const std::size_t m = host.edge_count();
  const Counts full = counts_of(host);
  for (std::size_t size = 0; size <= m; ++size) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < m; ++i)
        if (pick[i]) edges.push_back(host.edges()[i]);
      const UniformHypergraph seed(host.uniformity(), host.vertex_count(), edges);
      if (brute_closure(host, seed, family) == full) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return m;
}

inline UniformHypergraph random_subgraph(const UniformHypergraph& host, double keep, std::mt19937_64& rng,
                                         bool random_multiplicity = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Edge> edges;
  std::vector<Multiplicity> mult;
  for (std::size_t i = 0; i < host.edge_count(); ++i) {
    if (u(rng) >= keep) continue;
    edges.push_back(host.edges()[i]);
    const Multiplicity cap = host.multiplicity(i);
    mult.push_back(random_multiplicity ? 1 + static_cast<Multiplicity>(rng() % cap) : cap);
  }
  return UniformHypergraph(host.uniformity(), host.vertex_count(), std::move(edges), std::move(mult));
}

}  // namespace wsat::testing
