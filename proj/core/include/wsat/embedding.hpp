#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wsat/edge_counts.hpp"
#include "wsat/hypergraph.hpp"

namespace wsat {

/// A copy of a pattern inside a host.
///
/// `vertex_map[u]` is the host image of pattern vertex u. `instance_map` is
/// aligned with GroundSet(pattern): the j-th instance of a pattern edge f maps
/// to the j-th instance of the image edge (the canonical, lowest choice; see
/// for_each_instance_choice for the others).
struct Embedding {
  std::vector<Vertex> vertex_map;
  std::vector<EdgeInstance> instance_map;

  Edge image(const Edge& pattern_edge) const;
};

/// Reusable search plan for one pattern.
///
/// A copy is an injective vertex map under which every pattern edge lands on a
/// host edge of at least the same multiplicity. Vertices are assigned in a
/// greedy connectivity order; for full enumeration, ordering constraints
/// derived from the pattern's automorphism group yield one vertex map per
/// image edge multiset.
class PatternMatcher {
 public:
  /// Automorphism groups larger than this are not materialized; enumeration
  /// then falls back to deduplicating by image.
  static constexpr std::size_t kAutomorphismCap = std::size_t{1} << 18;

  explicit PatternMatcher(UniformHypergraph pattern);

  const UniformHypergraph& pattern() const noexcept { return pattern_; }
  /// |Aut(pattern)|, or nullopt when it exceeds kAutomorphismCap.
  std::optional<std::size_t> automorphism_count() const noexcept { return automorphisms_; }

  /// True iff some copy sends some pattern edge onto `anchor`.
  bool exists_through(const EdgeCounts& host, const Edge& anchor) const;

  /// Visits one vertex map per distinct image. The visitor returns false to stop.
  void for_each_copy(const EdgeCounts& host,
                     const std::function<bool(std::span<const Vertex>)>& visit) const;

  std::vector<Embedding> enumerate(const EdgeCounts& host,
                                   std::optional<std::size_t> limit = std::nullopt) const;

  Embedding make_embedding(std::span<const Vertex> vertex_map) const;

 private:
  struct Plan {
    std::vector<Vertex> order;                                  // pattern vertices, search order
    std::vector<std::vector<std::size_t>> edges_at;             // edges completed at each depth
    std::vector<std::vector<std::pair<Vertex, Vertex>>> less_at;  // phi(a) < phi(b) checks per depth
  };

  Plan make_plan(std::vector<Vertex> prefix, const std::vector<std::pair<Vertex, Vertex>>& less) const;
  bool extend(const Plan& plan, std::size_t depth, const EdgeCounts& host, std::vector<Vertex>& map,
              std::vector<char>& used, const std::function<bool(std::span<const Vertex>)>& visit) const;
  bool edges_ok(const Plan& plan, std::size_t depth, const EdgeCounts& host,
                const std::vector<Vertex>& map) const;

  UniformHypergraph pattern_;
  std::vector<std::uint64_t> degree_;
  std::vector<std::vector<std::size_t>> incident_;
  std::optional<std::size_t> automorphisms_;
  Plan enumeration_plan_;
  std::vector<Plan> anchored_plans_;  // one per pattern edge
};

/// exists_copy_through: throws InvalidInput on uniformity mismatch or an
/// anchor absent from the host.
bool exists_copy_through(const UniformHypergraph& host, const UniformHypergraph& pattern,
                         const Edge& anchor);

/// All copies up to pattern automorphism, truncated at `limit`.
std::vector<Embedding> enumerate_copies(const UniformHypergraph& host, const UniformHypergraph& pattern,
                                        std::optional<std::size_t> limit = std::nullopt);

/// Visits every injective choice of host instances for a copy, as a sorted
/// list of host ground-set element ids. The visitor returns false to stop.
void for_each_instance_choice(const Embedding& copy, const UniformHypergraph& pattern,
                              const GroundSet& host,
                              const std::function<bool(std::span<const std::uint32_t>)>& visit);

}  // namespace wsat
