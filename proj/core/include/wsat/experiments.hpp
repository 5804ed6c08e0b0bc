#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsat/hypergraph.hpp"

namespace wsat {

/// f(n) = a*n + C on the sampled tail n >= onset.
struct AffineFit {
  std::vector<std::pair<std::int64_t, std::int64_t>> samples;  // sorted by n
  std::int64_t slope = 0;
  std::int64_t intercept = 0;
  std::int64_t onset = 0;
  bool valid = false;  // at least three tail samples agree with the line
};

/// Fits the line through the last two samples and walks backwards while the
/// samples agree. Throws InvalidInput on fewer than three samples, repeated n,
/// or a tail whose last two n are not consecutive.
AffineFit affine_tail_fit(std::vector<std::pair<std::int64_t, std::int64_t>> samples);

/// G(n, p): each pair of [0, n) independently with probability p, decided in
/// colex order from a mt19937_64 seeded with `seed`.
UniformHypergraph gnp_sample(Vertex n, double p, std::uint64_t seed);

/// Every pair of vertices lies in some v-set all of whose other pairs are
/// edges of g, i.e. in a copy of K_v minus that pair.
bool clique_minus_edge_property(const UniformHypergraph& g, Vertex v);

struct RemarkTrial {
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  bool property_held = false;
  bool timed_out = false;
  std::optional<std::size_t> wsat_gn;
};

struct RemarkSummary {
  Vertex n = 0;
  double p = 0;
  std::size_t wsat_kn = 0;
  std::vector<RemarkTrial> trials;  // in trial order

  std::size_t skipped() const;
  std::size_t with_property() const;
  /// Trials with the property and wsat(G_n, F) >= wsat(K_n, F).
  std::size_t property_and_at_least() const;
  /// Trials with the property and wsat(G_n, F) < wsat(K_n, F).
  std::size_t violations() const;
};

struct RemarkOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  double timeout_seconds = 0;  // per solver call, 0 disables
};

/// Trial t samples G(n, p) with seed options.seed + t and compares exact
/// wsat(G_n, F) against wsat(K_n, F). F is a simple graph; the property is
/// checked for v = |V(F)|.
RemarkSummary remark_check(Vertex n, double p, const UniformHypergraph& f, const RemarkOptions& options);

/// Header plus one row per trial: seed,n,p,wsat_gn,wsat_kn,property_held.
std::string remark_csv(const RemarkSummary& summary);

}  // namespace wsat
