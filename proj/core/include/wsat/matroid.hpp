#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsat/embedding.hpp"
#include "wsat/hypergraph.hpp"

namespace wsat {

using ElementId = std::uint32_t;
using ElementSet = std::vector<ElementId>;

/// Independence oracle over ground set {0, ..., ground_size() - 1}.
///
/// When a matroid lives on a host's edges, element i is GroundSet(host)[i].
/// Implementations must be pure. rank/basis/coloops have greedy defaults that
/// only use is_independent; subclasses override them with faster exact
/// routines.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  virtual std::size_t ground_size() const = 0;
  virtual bool is_independent(std::span<const ElementId> subset) const = 0;
  virtual std::string describe() const = 0;

  /// Greedy basis of `subset`, scanning it in the given order.
  virtual ElementSet basis(std::span<const ElementId> subset) const;
  /// Mask over `subset`: true where the element is a coloop of the restriction.
  virtual std::vector<bool> coloops(std::span<const ElementId> subset) const;
};

struct RankReport {
  ElementSet subset;
  std::size_t rank = 0;
  ElementSet basis;  // independent, inside subset, |basis| == rank
};

/// Throws InvalidInput on foreign or repeated elements.
RankReport rank(const MatroidOracle& m, std::span<const ElementId> subset);
RankReport rank_full(const MatroidOracle& m);

/// No element of `subset` is a coloop. Throws InvalidInput on the empty set.
bool is_cycle(const MatroidOracle& m, std::span<const ElementId> subset);

// ---------------------------------------------------------------------------
// Simple matroids (reference oracles for tests and user experiments).

class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(std::size_t rank, std::size_t ground) : rank_(rank), ground_(ground) {}
  std::size_t ground_size() const override { return ground_; }
  bool is_independent(std::span<const ElementId> subset) const override { return subset.size() <= rank_; }
  std::string describe() const override;

 private:
  std::size_t rank_;
  std::size_t ground_;
};

class FreeMatroid final : public MatroidOracle {
 public:
  explicit FreeMatroid(std::size_t ground) : ground_(ground) {}
  std::size_t ground_size() const override { return ground_; }
  bool is_independent(std::span<const ElementId>) const override { return true; }
  std::string describe() const override { return "free"; }

 private:
  std::size_t ground_;
};

/// M restricted to a subset of its ground set, renumbered 0..|kept|-1.
class RestrictedMatroid final : public MatroidOracle {
 public:
  RestrictedMatroid(const MatroidOracle& base, ElementSet kept);
  std::size_t ground_size() const override { return kept_.size(); }
  bool is_independent(std::span<const ElementId> subset) const override;
  ElementSet basis(std::span<const ElementId> subset) const override;
  std::vector<bool> coloops(std::span<const ElementId> subset) const override;
  std::string describe() const override;
  ElementId parent_element(ElementId e) const { return kept_.at(e); }

 private:
  ElementSet lift(std::span<const ElementId> subset) const;
  const MatroidOracle& base_;
  ElementSet kept_;
};

/// Ground elements of `host` whose edges avoid vertex `u`.
ElementSet elements_avoiding(const GroundSet& host, Vertex u);

// ---------------------------------------------------------------------------
// Weak saturation of a matroid.

struct CopyCounterexample {
  std::size_t pattern = 0;
  Embedding copy;
  ElementSet elements;  // the instance set that is not a cycle
};

struct VerificationResult {
  bool all_cycles = false;   // every inspected copy was a cycle
  bool exhaustive = true;    // false when a copy limit cut enumeration short
  std::size_t copies_checked = 0;
  std::size_t instance_sets_checked = 0;
  std::optional<CopyCounterexample> counterexample;

  /// Certified only when every copy was inspected.
  bool verified() const noexcept { return all_cycles && exhaustive; }
};

struct VerifyOptions {
  /// Inspect at most this many copies per family member; the result is then
  /// no longer a certificate.
  std::optional<std::size_t> copy_limit;
};

/// Checks that every copy of every family member in `host` is a cycle of `m`,
/// over every injective choice of host instances.
VerificationResult verify_weakly_saturated(const MatroidOracle& m, const GroundSet& host,
                                           const PatternFamily& family, const VerifyOptions& options = {});

struct LowerBound {
  VerificationResult verification;
  RankReport rank;
  std::string matroid;
  std::size_t value() const noexcept { return rank.rank; }
};

/// Certified rank lower bound on wsat(host, family). Throws
/// VerificationFailure unless the matroid verifies.
LowerBound certified_lower_bound(const MatroidOracle& m, const GroundSet& host, const PatternFamily& family,
                                 const VerifyOptions& options = {});
std::size_t lower_bound(const MatroidOracle& m, const GroundSet& host, const PatternFamily& family);

/// rank(E(seed)) == rank(E(host)). Meant for verified matroids and weakly
/// saturated seeds, where equality must hold.
bool preservation_check(const MatroidOracle& m, const GroundSet& host, const UniformHypergraph& seed);

}  // namespace wsat
