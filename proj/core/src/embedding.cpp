#include "wsat/embedding.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "wsat/error.hpp"

namespace wsat {

Edge Embedding::image(const Edge& pattern_edge) const {
  std::array<Vertex, kMaxUniformity> img{};
  for (int i = 0; i < pattern_edge.size(); ++i) img[static_cast<std::size_t>(i)] = vertex_map.at(pattern_edge[i]);
  return Edge(std::span<const Vertex>(img.data(), static_cast<std::size_t>(pattern_edge.size())));
}

PatternMatcher::PatternMatcher(UniformHypergraph pattern)
    : pattern_(std::move(pattern)), degree_(pattern_.degrees()), incident_(pattern_.vertex_count()) {
  for (std::size_t i = 0; i < pattern_.edge_count(); ++i)
    for (Vertex v : pattern_.edges()[i].vertices()) incident_[v].push_back(i);

  for (const Edge& f : pattern_.edges()) {
    anchored_plans_.push_back(make_plan(std::vector<Vertex>(f.vertices().begin(), f.vertices().end()), {}));
  }

  // Automorphisms are the self-copies of the pattern.
  Plan base = make_plan({}, {});
  const EdgeCounts self(pattern_);
  std::vector<std::vector<Vertex>> autos;
  bool overflow = false;
  {
    std::vector<Vertex> map(pattern_.vertex_count());
    std::vector<char> used(pattern_.vertex_count(), 0);
    extend(base, 0, self, map, used, [&](std::span<const Vertex> m) {
      if (autos.size() >= kAutomorphismCap) {
        overflow = true;
        return false;
      }
      autos.emplace_back(m.begin(), m.end());
      return true;
    });
  }
  if (overflow) {
    enumeration_plan_ = std::move(base);
    return;
  }
  automorphisms_ = autos.size();

  // Stabilizer chain: fix vertices in search order; each fixed vertex must map
  // below every other member of its orbit under the current stabilizer.
  std::vector<std::pair<Vertex, Vertex>> less;
  for (Vertex v : base.order) {
    if (autos.size() <= 1) break;
    std::set<Vertex> orbit;
    for (const auto& a : autos) orbit.insert(a[v]);
    for (Vertex w : orbit)
      if (w != v) less.emplace_back(v, w);
    std::erase_if(autos, [v](const std::vector<Vertex>& a) { return a[v] != v; });
  }
  enumeration_plan_ = make_plan(base.order, less);
}

PatternMatcher::Plan PatternMatcher::make_plan(std::vector<Vertex> prefix,
                                               const std::vector<std::pair<Vertex, Vertex>>& less) const {
  const Vertex k = pattern_.vertex_count();
  std::vector<char> placed(k, 0);
  for (Vertex v : prefix) placed[v] = 1;
  Plan plan;
  plan.order = std::move(prefix);
  while (plan.order.size() < k) {
    Vertex best = 0;
    std::int64_t best_score = -1;
    std::uint64_t best_degree = 0;
    for (Vertex u = 0; u < k; ++u) {
      if (placed[u]) continue;
      std::int64_t score = 0;
      for (std::size_t ei : incident_[u])
        for (Vertex w : pattern_.edges()[ei].vertices()) score += placed[w];
      if (score > best_score || (score == best_score && degree_[u] > best_degree)) {
        best = u;
        best_score = score;
        best_degree = degree_[u];
      }
    }
    placed[best] = 1;
    plan.order.push_back(best);
  }

  std::vector<std::size_t> pos(k);
  for (std::size_t d = 0; d < plan.order.size(); ++d) pos[plan.order[d]] = d;
  plan.edges_at.assign(k, {});
  plan.less_at.assign(k, {});
  for (std::size_t i = 0; i < pattern_.edge_count(); ++i) {
    std::size_t last = 0;
    for (Vertex v : pattern_.edges()[i].vertices()) last = std::max(last, pos[v]);
    plan.edges_at[last].push_back(i);
  }
  for (auto [a, b] : less) plan.less_at[std::max(pos[a], pos[b])].emplace_back(a, b);
  return plan;
}

bool PatternMatcher::edges_ok(const Plan& plan, std::size_t depth, const EdgeCounts& host,
                              const std::vector<Vertex>& map) const {
  for (auto [a, b] : plan.less_at[depth])
    if (map[a] >= map[b]) return false;
  std::array<Vertex, kMaxUniformity> img{};
  for (std::size_t ei : plan.edges_at[depth]) {
    const Edge& f = pattern_.edges()[ei];
    for (int i = 0; i < f.size(); ++i) img[static_cast<std::size_t>(i)] = map[f[i]];
    const Edge image(std::span<const Vertex>(img.data(), static_cast<std::size_t>(f.size())));
    if (host.get(image) < pattern_.multiplicity(ei)) return false;
  }
  return true;
}

bool PatternMatcher::extend(const Plan& plan, std::size_t depth, const EdgeCounts& host,
                            std::vector<Vertex>& map, std::vector<char>& used,
                            const std::function<bool(std::span<const Vertex>)>& visit) const {
  if (depth == plan.order.size()) return visit(map);
  const Vertex u = plan.order[depth];
  for (Vertex h = 0; h < host.vertex_count(); ++h) {
    if (used[h] || host.degree(h) < degree_[u]) continue;
    map[u] = h;
    if (!edges_ok(plan, depth, host, map)) continue;
    used[h] = 1;
    const bool keep_going = extend(plan, depth + 1, host, map, used, visit);
    used[h] = 0;
    if (!keep_going) return false;
  }
  return true;
}

bool PatternMatcher::exists_through(const EdgeCounts& host, const Edge& anchor) const {
  if (host.uniformity() != pattern_.uniformity()) throw InvalidInput("pattern and host uniformities differ");
  const Multiplicity available = host.get(anchor);
  if (available == 0 || pattern_.vertex_count() > host.vertex_count()) return false;

  const int r = anchor.size();
  std::vector<Vertex> map(pattern_.vertex_count());
  std::vector<char> used(host.vertex_count(), 0);
  for (Vertex v : anchor.vertices()) used[v] = 1;
  const auto stop = [](std::span<const Vertex>) { return false; };

  for (std::size_t fi = 0; fi < pattern_.edge_count(); ++fi) {
    if (pattern_.multiplicity(fi) > available) continue;
    const Plan& plan = anchored_plans_[fi];
    std::array<Vertex, kMaxUniformity> perm{};
    std::copy(anchor.vertices().begin(), anchor.vertices().end(), perm.begin());
    do {
      bool ok = true;
      for (int i = 0; i < r && ok; ++i) {
        map[plan.order[static_cast<std::size_t>(i)]] = perm[static_cast<std::size_t>(i)];
        ok = host.degree(perm[static_cast<std::size_t>(i)]) >= degree_[plan.order[static_cast<std::size_t>(i)]];
      }
      if (!ok) continue;
      for (int d = 0; d < r && ok; ++d) ok = edges_ok(plan, static_cast<std::size_t>(d), host, map);
      if (!ok) continue;
      if (!extend(plan, static_cast<std::size_t>(r), host, map, used, stop)) return true;
    } while (std::next_permutation(perm.begin(), perm.begin() + r));
  }
  return false;
}

void PatternMatcher::for_each_copy(const EdgeCounts& host,
                                   const std::function<bool(std::span<const Vertex>)>& visit) const {
  if (host.uniformity() != pattern_.uniformity()) throw InvalidInput("pattern and host uniformities differ");
  if (pattern_.vertex_count() > host.vertex_count()) return;
  std::set<std::vector<std::pair<std::uint64_t, Multiplicity>>> seen;
  std::vector<Vertex> map(pattern_.vertex_count());
  std::vector<char> used(host.vertex_count(), 0);
  std::array<Vertex, kMaxUniformity> img{};
  extend(enumeration_plan_, 0, host, map, used, [&](std::span<const Vertex> m) {
    std::vector<std::pair<std::uint64_t, Multiplicity>> key;
    key.reserve(pattern_.edge_count());
    for (std::size_t i = 0; i < pattern_.edge_count(); ++i) {
      const Edge& f = pattern_.edges()[i];
      for (int j = 0; j < f.size(); ++j) img[static_cast<std::size_t>(j)] = m[f[j]];
      key.emplace_back(Edge(std::span<const Vertex>(img.data(), static_cast<std::size_t>(f.size()))).colex_rank(),
                       pattern_.multiplicity(i));
    }
    std::sort(key.begin(), key.end());
    if (!seen.insert(std::move(key)).second) return true;
    return visit(m);
  });
}

std::vector<Embedding> PatternMatcher::enumerate(const EdgeCounts& host, std::optional<std::size_t> limit) const {
  std::vector<Embedding> out;
  if (limit && *limit == 0) return out;
  for_each_copy(host, [&](std::span<const Vertex> m) {
    out.push_back(make_embedding(m));
    return !limit || out.size() < *limit;
  });
  return out;
}

Embedding PatternMatcher::make_embedding(std::span<const Vertex> vertex_map) const {
  Embedding e;
  e.vertex_map.assign(vertex_map.begin(), vertex_map.end());
  for (std::size_t i = 0; i < pattern_.edge_count(); ++i) {
    const Edge img = e.image(pattern_.edges()[i]);
    for (Multiplicity j = 0; j < pattern_.multiplicity(i); ++j) e.instance_map.push_back({img, j});
  }
  return e;
}

bool exists_copy_through(const UniformHypergraph& host, const UniformHypergraph& pattern, const Edge& anchor) {
  if (host.uniformity() != pattern.uniformity()) throw InvalidInput("pattern and host uniformities differ");
  if (host.multiplicity_of(anchor) == 0) throw InvalidInput("anchor " + anchor.to_string() + " is not a host edge");
  return PatternMatcher(pattern).exists_through(EdgeCounts(host), anchor);
}

std::vector<Embedding> enumerate_copies(const UniformHypergraph& host, const UniformHypergraph& pattern,
                                        std::optional<std::size_t> limit) {
  if (host.uniformity() != pattern.uniformity()) throw InvalidInput("pattern and host uniformities differ");
  return PatternMatcher(pattern).enumerate(EdgeCounts(host), limit);
}

namespace {

// Next m-combination of [0, n) in lexicographic order; false after the last.
bool next_combination(std::vector<Multiplicity>& c, Multiplicity n) {
  const std::size_t m = c.size();
  for (std::size_t i = m; i-- > 0;) {
    if (c[i] < n - (m - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

void for_each_instance_choice(const Embedding& copy, const UniformHypergraph& pattern, const GroundSet& host,
                              const std::function<bool(std::span<const std::uint32_t>)>& visit) {
  const std::size_t k = pattern.edge_count();
  std::vector<std::size_t> host_edge(k);
  std::vector<Multiplicity> host_mult(k);
  std::vector<std::vector<Multiplicity>> choice(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto idx = host.host().find(copy.image(pattern.edges()[i]));
    if (!idx || host.host().multiplicity(*idx) < pattern.multiplicity(i)) {
      throw InvalidInput("embedding is not a copy in this host");
    }
    host_edge[i] = *idx;
    host_mult[i] = host.host().multiplicity(*idx);
    choice[i].resize(pattern.multiplicity(i));
    for (Multiplicity j = 0; j < pattern.multiplicity(i); ++j) choice[i][j] = j;
  }

  std::vector<std::uint32_t> ids;
  while (true) {
    ids.clear();
    for (std::size_t i = 0; i < k; ++i)
      for (Multiplicity j : choice[i]) ids.push_back(host.element(host_edge[i], j));
    std::sort(ids.begin(), ids.end());
    if (!visit(ids)) return;
    // Odometer over the per-edge combinations.
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (next_combination(choice[i], host_mult[i])) break;
      for (Multiplicity j = 0; j < choice[i].size(); ++j) choice[i][j] = j;
    }
    if (i == k) return;
  }
}

}  // namespace wsat
