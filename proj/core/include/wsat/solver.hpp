#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wsat/hypergraph.hpp"
#include "wsat/matroid.hpp"

namespace wsat {

/// Where a lower bound came from.
struct LowerBoundProvenance {
  std::string matroid;
  std::size_t rank = 0;
  bool verified = false;  // only verified matroids contribute to `lower`
};

/// Result of a weak saturation computation.
///
/// When `exact`, value == lower == upper. Otherwise [lower, upper] is the best
/// verified interval and value == upper. The certificate always percolates
/// and has `upper` instances.
struct WsatReport {
  std::size_t value = 0;
  bool exact = false;
  std::size_t lower = 0;
  std::size_t upper = 0;
  UniformHypergraph certificate;
  std::string method;  // exhaustive | bnb | bounds-met | greedy
  std::vector<LowerBoundProvenance> lower_bounds;
  bool timed_out = false;
  std::uint64_t nodes = 0;
};

struct SolverOptions {
  /// Wall-clock budget in seconds; 0 disables the timeout.
  double timeout_seconds = 0;
};

enum class UpperStrategy {
  kConstructions,  // best explicit construction as built
  kPruned,         // additionally drop single instances while percolation survives
};

inline constexpr std::size_t kExhaustiveInstanceCap = 14;

/// Smallest percolating seed by increasing size. Throws InvalidInput when the
/// host has more than kExhaustiveInstanceCap instances.
WsatReport wsat_exhaustive(const UniformHypergraph& host, const PatternFamily& family,
                           const SolverOptions& options = {});

/// Upper bound from the host itself, disjoint cliques, the join construction
/// and the sharpness construction, restricted to the host.
WsatReport greedy_upper(const UniformHypergraph& host, const PatternFamily& family,
                        UpperStrategy strategy = UpperStrategy::kPruned);

/// Exact value by branch and bound over host instances. Each oracle is
/// verified weakly saturated first; only verified ones prune. On timeout the
/// report carries the verified interval and exact == false.
WsatReport wsat_bnb(const UniformHypergraph& host, const PatternFamily& family,
                    std::span<const MatroidOracle* const> lower_oracles = {}, const SolverOptions& options = {});

/// No search: verified matroid lower bounds against greedy_upper. Exact
/// ("bounds-met") only when they coincide.
WsatReport wsat_bounds(const UniformHypergraph& host, const PatternFamily& family,
                       std::span<const MatroidOracle* const> lower_oracles);

}  // namespace wsat
