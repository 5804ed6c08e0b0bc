#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wsat/embedding.hpp"
#include "wsat/hypergraph.hpp"

namespace wsat {

/// One single-instance addition of the bootstrap process.
struct TraceStep {
  Edge edge;
  Multiplicity instance = 0;  // index of the added instance of `edge`
  std::size_t pattern = 0;    // first family member with a copy through it
};

struct ClosureReport {
  UniformHypergraph final_graph;
  std::vector<TraceStep> trace;
  bool percolated = false;  // final_graph == host
};

/// Precompiled matchers for a family; reusable across closure calls.
class FamilyMatcher {
 public:
  explicit FamilyMatcher(const PatternFamily& family);

  const PatternFamily& family() const noexcept { return family_; }
  /// Index of the first member with a copy through `anchor`, if any.
  std::optional<std::size_t> witness(const EdgeCounts& state, const Edge& anchor) const;
  std::span<const PatternMatcher> matchers() const noexcept { return matchers_; }

 private:
  PatternFamily family_;
  std::vector<PatternMatcher> matchers_;
};

struct ClosureOptions {
  /// Permutation of host edge indices to scan; colex order when empty.
  std::vector<std::size_t> scan_order;
  /// Skip the trace and return as soon as the host is reached.
  bool decide_only = false;
};

/// F-bootstrap closure of `start` inside `host`.
///
/// Repeats passes over the missing instances until a pass adds nothing. An
/// instance is added when some family member has a copy through it in the
/// current graph. Throws InvalidInput unless start is a sub-multiset of host.
ClosureReport closure(const UniformHypergraph& host, const UniformHypergraph& start,
                      const FamilyMatcher& family, const ClosureOptions& options = {});
ClosureReport closure(const UniformHypergraph& host, const UniformHypergraph& start,
                      const PatternFamily& family, const ClosureOptions& options = {});

/// In-place closure of `state` (a sub-multiset of host) in colex scan order.
/// Returns true iff it reaches the host.
bool close_in_place(const UniformHypergraph& host, EdgeCounts& state, const FamilyMatcher& family);

bool is_weakly_saturated(const UniformHypergraph& host, const UniformHypergraph& start,
                         const FamilyMatcher& family);
bool is_weakly_saturated(const UniformHypergraph& host, const UniformHypergraph& start,
                         const PatternFamily& family);

/// Replays a trace from `start` and re-checks every step with an independent
/// anchored search. True iff every step is witnessed and the replay ends at
/// `report.final_graph`.
bool replay_trace(const UniformHypergraph& host, const UniformHypergraph& start, const PatternFamily& family,
                  const ClosureReport& report);

/// All edges of K_n meeting [0, v), v = |V(F)| (graphs only, n >= v + 2).
UniformHypergraph join_construction(Vertex n, const UniformHypergraph& pattern);

/// Edges of K_n^(r) with at most s - 1 vertices outside [0, v), v = |V(F)|.
/// Percolates under {F} when s is the sharpness of F. Requires n >= v and
/// 0 <= s <= r.
UniformHypergraph hyper_construction(Vertex n, const UniformHypergraph& pattern, int s);

}  // namespace wsat
