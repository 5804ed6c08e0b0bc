#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "wsat/hypergraph.hpp"
#include "wsat/matroid.hpp"

namespace wsat {

/// Count matroid on edge instances: I is independent iff
/// |I'| <= q * v(I') for every I' subset of I, where v(I') counts the vertices
/// touched by I'.
///
/// By Hall's theorem this is equivalent to assigning every instance of I to
/// one of its own vertices with at most q instances per vertex, which is what
/// the oracle decides, by augmenting paths in instance order.
class CountMatroid final : public MatroidOracle {
 public:
  CountMatroid(GroundSet ground, std::uint32_t capacity);
  /// q = C(k, 2), the capacity that makes K_k^k a basis.
  static CountMatroid for_clique_size(GroundSet ground, std::uint32_t k);

  std::size_t ground_size() const override { return ground_.size(); }
  bool is_independent(std::span<const ElementId> subset) const override;
  ElementSet basis(std::span<const ElementId> subset) const override;
  std::vector<bool> coloops(std::span<const ElementId> subset) const override;
  std::string describe() const override;

  std::uint32_t capacity() const noexcept { return capacity_; }
  const GroundSet& ground() const noexcept { return ground_; }

 private:
  GroundSet ground_;
  std::uint32_t capacity_;
};

/// Largest subset of `subset` satisfying the count condition on every
/// sub-subset, by exhaustive enumeration. Throws InvalidInput past 20 elements.
std::size_t brute_force_rank(const CountMatroid& m, std::span<const ElementId> subset);

/// The universal count condition checked literally over all nonempty subsets.
/// Throws InvalidInput past 20 elements.
bool satisfies_count_condition(const CountMatroid& m, std::span<const ElementId> subset);

}  // namespace wsat
