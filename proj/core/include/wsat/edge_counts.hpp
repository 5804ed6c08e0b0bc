#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "wsat/hypergraph.hpp"

namespace wsat {

/// Mutable edge -> multiplicity table over K_n^(r), plus weighted degrees.
///
/// Dense (indexed by colex rank) when C(n, r) is small, hashed otherwise.
/// Used as the working state of closure and as the host side of embedding
/// search.
class EdgeCounts {
 public:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

  EdgeCounts(int r, Vertex n);
  explicit EdgeCounts(const UniformHypergraph& g);

  int uniformity() const noexcept { return r_; }
  Vertex vertex_count() const noexcept { return n_; }

  Multiplicity get(const Edge& e) const;
  void set(const Edge& e, Multiplicity m);
  void increment(const Edge& e) { set(e, get(e) + 1); }
  void decrement(const Edge& e) { set(e, get(e) - 1); }

  std::uint64_t degree(Vertex v) const { return degree_[v]; }
  std::uint64_t total() const noexcept { return total_; }

  /// Snapshot of the nonzero entries.
  UniformHypergraph to_hypergraph() const;

 private:
  int r_;
  Vertex n_;
  bool dense_;
  std::vector<Multiplicity> table_;
  std::unordered_map<std::uint64_t, Multiplicity> sparse_;
  std::vector<std::uint64_t> degree_;
  std::uint64_t total_ = 0;
};

}  // namespace wsat
