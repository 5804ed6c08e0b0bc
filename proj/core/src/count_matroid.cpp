#include "wsat/count_matroid.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <map>

#include "wsat/error.hpp"

namespace wsat {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Assignment of instances to vertices with a per-vertex capacity. Instances
// are positions into the caller's subset; vertices are host vertex ids.
class SlotMatching {
 public:
  SlotMatching(const GroundSet& ground, std::span<const ElementId> subset, std::uint32_t capacity)
      : ground_(ground),
        subset_(subset),
        capacity_(capacity),
        owner_(subset.size(), kNone),
        held_(ground.vertex_count()),
        parent_instance_(ground.vertex_count(), kNone),
        parent_vertex_(ground.vertex_count(), kNone),
        visited_(ground.vertex_count(), 0) {}

  std::span<const Vertex> endpoints(std::uint32_t pos) const { return ground_[subset_[pos]].edge.vertices(); }

  // Tries to assign instance `pos`; leaves the matching unchanged on failure.
  bool augment(std::uint32_t pos) {
    for (Vertex w : endpoints(pos)) {
      if (held_[w].size() < capacity_) {
        assign(pos, kNone, w);
        return true;
      }
    }
    touched_.clear();
    std::deque<Vertex> queue;
    for (Vertex w : endpoints(pos)) {
      if (visited_[w]) continue;
      mark(w, pos, kNone);
      queue.push_back(w);
    }
    bool found = false;
    while (!queue.empty() && !found) {
      const Vertex w = queue.front();
      queue.pop_front();
      for (std::uint32_t y : held_[w]) {
        for (Vertex z : endpoints(y)) {
          if (visited_[z]) continue;
          mark(z, y, w);
          if (held_[z].size() < capacity_) {
            flip(z);
            found = true;
            break;
          }
          queue.push_back(z);
        }
        if (found) break;
      }
    }
    for (Vertex v : touched_) visited_[v] = 0;
    return found;
  }

  bool matched(std::uint32_t pos) const { return owner_[pos] != kNone; }

  // Matched instances that some maximum matching leaves unmatched, together
  // with the unmatched ones: every instance reachable by an even alternating
  // path from an unmatched instance.
  std::vector<bool> replaceable() const {
    std::vector<bool> out(subset_.size(), false);
    std::vector<char> seen(held_.size(), 0);
    std::deque<Vertex> queue;
    for (std::uint32_t pos = 0; pos < subset_.size(); ++pos) {
      if (matched(pos)) continue;
      out[pos] = true;
      for (Vertex w : endpoints(pos))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    while (!queue.empty()) {
      const Vertex w = queue.front();
      queue.pop_front();
      for (std::uint32_t y : held_[w]) {
        out[y] = true;
        for (Vertex z : endpoints(y))
          if (!seen[z]) {
            seen[z] = 1;
            queue.push_back(z);
          }
      }
    }
    return out;
  }

 private:
  void mark(Vertex v, std::uint32_t instance, Vertex from) {
    visited_[v] = 1;
    parent_instance_[v] = instance;
    parent_vertex_[v] = from;
    touched_.push_back(v);
  }

  void assign(std::uint32_t pos, Vertex from, Vertex to) {
    if (from != kNone) {
      auto& list = held_[from];
      list.erase(std::find(list.begin(), list.end(), pos));
    }
    held_[to].push_back(pos);
    owner_[pos] = to;
  }

  // Shift instances back along the BFS tree ending at free vertex `v`.
  void flip(Vertex v) {
    while (v != kNone) {
      const std::uint32_t y = parent_instance_[v];
      const Vertex prev = parent_vertex_[v];
      assign(y, prev, v);
      v = prev;
    }
  }

  const GroundSet& ground_;
  std::span<const ElementId> subset_;
  std::uint32_t capacity_;
  std::vector<Vertex> owner_;
  std::vector<std::vector<std::uint32_t>> held_;
  std::vector<std::uint32_t> parent_instance_;
  std::vector<Vertex> parent_vertex_;
  std::vector<char> visited_;
  std::vector<Vertex> touched_;
};

void check_elements(const CountMatroid& m, std::span<const ElementId> subset) {
  for (ElementId e : subset)
    if (e >= m.ground_size()) throw InvalidInput("element " + std::to_string(e) + " is not in the ground set");
}

}  // namespace

CountMatroid::CountMatroid(GroundSet ground, std::uint32_t capacity)
    : ground_(std::move(ground)), capacity_(capacity) {
  if (capacity_ == 0) throw InvalidInput("count matroid capacity must be positive");
}

CountMatroid CountMatroid::for_clique_size(GroundSet ground, std::uint32_t k) {
  if (k < 2) throw InvalidInput("count matroid clique size must be at least 2");
  return CountMatroid(std::move(ground), static_cast<std::uint32_t>(binomial(k, 2)));
}

bool CountMatroid::is_independent(std::span<const ElementId> subset) const {
  check_elements(*this, subset);
  if (subset.size() > static_cast<std::size_t>(capacity_) * ground_.vertex_count()) return false;
  SlotMatching matching(ground_, subset, capacity_);
  for (std::uint32_t pos = 0; pos < subset.size(); ++pos)
    if (!matching.augment(pos)) return false;
  return true;
}

ElementSet CountMatroid::basis(std::span<const ElementId> subset) const {
  check_elements(*this, subset);
  SlotMatching matching(ground_, subset, capacity_);
  ElementSet out;
  for (std::uint32_t pos = 0; pos < subset.size(); ++pos)
    if (matching.augment(pos)) out.push_back(subset[pos]);
  return out;
}

std::vector<bool> CountMatroid::coloops(std::span<const ElementId> subset) const {
  check_elements(*this, subset);
  SlotMatching matching(ground_, subset, capacity_);
  for (std::uint32_t pos = 0; pos < subset.size(); ++pos) matching.augment(pos);
  std::vector<bool> mask = matching.replaceable();
  mask.flip();
  return mask;
}

std::string CountMatroid::describe() const { return "count(q=" + std::to_string(capacity_) + ")"; }

namespace {

// bad[mask]: some nonempty submask violates |I'| <= q v(I').
std::vector<char> violation_closure(const CountMatroid& m, std::span<const ElementId> subset) {
  if (subset.size() > 20) throw InvalidInput("brute force count check is capped at 20 elements");
  const std::size_t k = subset.size();
  std::map<Vertex, int> vertex_bit;
  for (ElementId e : subset)
    for (Vertex v : m.ground()[e].edge.vertices()) vertex_bit.emplace(v, static_cast<int>(vertex_bit.size()));
  if (vertex_bit.size() > 64) throw InvalidInput("brute force count check touches too many vertices");

  std::vector<std::uint64_t> element_vertices(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex v : m.ground()[subset[i]].edge.vertices()) element_vertices[i] |= std::uint64_t{1} << vertex_bit[v];

  const std::size_t total = std::size_t{1} << k;
  std::vector<std::uint64_t> touched(total, 0);
  std::vector<char> bad(total, 0);
  for (std::size_t mask = 1; mask < total; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    touched[mask] = touched[mask & (mask - 1)] | element_vertices[low];
    const auto size = static_cast<std::uint64_t>(std::popcount(mask));
    bad[mask] = size > std::uint64_t{m.capacity()} * static_cast<std::uint64_t>(std::popcount(touched[mask]));
  }
  // Upward closure over the subset lattice.
  for (std::size_t bit = 0; bit < k; ++bit)
    for (std::size_t mask = 0; mask < total; ++mask)
      if (mask & (std::size_t{1} << bit)) bad[mask] = bad[mask] || bad[mask ^ (std::size_t{1} << bit)];
  return bad;
}

}  // namespace

std::size_t brute_force_rank(const CountMatroid& m, std::span<const ElementId> subset) {
  check_elements(m, subset);
  const auto bad = violation_closure(m, subset);
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < bad.size(); ++mask)
    if (!bad[mask]) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  return best;
}

bool satisfies_count_condition(const CountMatroid& m, std::span<const ElementId> subset) {
  check_elements(m, subset);
  const auto bad = violation_closure(m, subset);
  return !bad.back();
}

}  // namespace wsat
