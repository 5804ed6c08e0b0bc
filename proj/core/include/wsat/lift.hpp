#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "wsat/hypergraph.hpp"
#include "wsat/matroid.hpp"

namespace wsat {

/// A lower bound on wsat(G, F) obtained from the k-fold multigraph lift.
struct LiftReport {
  Multiplicity k = 1;
  UniformHypergraph host;   // G^k
  PatternFamily family;     // {F_e^k : e in E(F)}
  std::string matroid;
  VerificationResult verification;
  std::size_t rank = 0;
  std::size_t bound = 0;    // ceil(rank / k)
  std::optional<std::size_t> upper;

  /// True when an upper bound is known and meets the lift bound.
  bool tight() const noexcept { return upper && *upper == bound; }
};

/// Verifies `m` (defined on the instances of G^k) against lift_family(F, k)
/// and returns ceil(rank / k). Throws VerificationFailure with the offending
/// copy when some lifted copy is not a cycle. Graphs only.
LiftReport lift_bound(const UniformHypergraph& g, const UniformHypergraph& f, Multiplicity k,
                      const MatroidOracle& m);

/// Checks that H^k percolates in G^k under the lifted family and returns
/// k * |E(H)|. Throws VerificationFailure if it does not.
std::size_t lift_upper_transfer(const UniformHypergraph& g, const UniformHypergraph& f, Multiplicity k,
                                const UniformHypergraph& h);

}  // namespace wsat
