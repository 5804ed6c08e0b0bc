#include "wsat/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "wsat/edge_counts.hpp"
#include "wsat/error.hpp"

namespace wsat {

namespace {

void check_subset(const MatroidOracle& m, std::span<const ElementId> subset) {
  std::vector<char> seen(m.ground_size(), 0);
  for (ElementId e : subset) {
    if (e >= m.ground_size()) throw InvalidInput("element " + std::to_string(e) + " is not in the ground set");
    if (seen[e]) throw InvalidInput("element " + std::to_string(e) + " repeated in subset");
    seen[e] = 1;
  }
}

}  // namespace

ElementSet MatroidOracle::basis(std::span<const ElementId> subset) const {
  ElementSet b;
  for (ElementId e : subset) {
    b.push_back(e);
    if (!is_independent(b)) b.pop_back();
  }
  return b;
}

std::vector<bool> MatroidOracle::coloops(std::span<const ElementId> subset) const {
  // Only basis elements can be coloops; b is one iff dropping it lowers rank.
  const ElementSet b = basis(subset);
  std::vector<bool> mask(subset.size(), false);
  std::vector<ElementId> rest;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (std::find(b.begin(), b.end(), subset[i]) == b.end()) continue;
    rest.assign(subset.begin(), subset.end());
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    mask[i] = basis(rest).size() < b.size();
  }
  return mask;
}

RankReport rank(const MatroidOracle& m, std::span<const ElementId> subset) {
  check_subset(m, subset);
  RankReport report;
  report.subset.assign(subset.begin(), subset.end());
  report.basis = m.basis(subset);
  report.rank = report.basis.size();
  return report;
}

RankReport rank_full(const MatroidOracle& m) {
  ElementSet all(m.ground_size());
  std::iota(all.begin(), all.end(), ElementId{0});
  return rank(m, all);
}

bool is_cycle(const MatroidOracle& m, std::span<const ElementId> subset) {
  if (subset.empty()) throw InvalidInput("is_cycle needs a nonempty set");
  check_subset(m, subset);
  const auto mask = m.coloops(subset);
  return std::none_of(mask.begin(), mask.end(), [](bool c) { return c; });
}

std::string UniformMatroid::describe() const {
  return "uniform(rank=" + std::to_string(rank_) + ",ground=" + std::to_string(ground_) + ")";
}

RestrictedMatroid::RestrictedMatroid(const MatroidOracle& base, ElementSet kept)
    : base_(base), kept_(std::move(kept)) {
  check_subset(base_, kept_);
}

ElementSet RestrictedMatroid::lift(std::span<const ElementId> subset) const {
  ElementSet out;
  out.reserve(subset.size());
  for (ElementId e : subset) out.push_back(kept_.at(e));
  return out;
}

bool RestrictedMatroid::is_independent(std::span<const ElementId> subset) const {
  return base_.is_independent(lift(subset));
}

ElementSet RestrictedMatroid::basis(std::span<const ElementId> subset) const {
  const ElementSet lifted = lift(subset);
  const ElementSet b = base_.basis(lifted);
  ElementSet out;
  for (ElementId e : b) out.push_back(subset[static_cast<std::size_t>(std::find(lifted.begin(), lifted.end(), e) - lifted.begin())]);
  return out;
}

std::vector<bool> RestrictedMatroid::coloops(std::span<const ElementId> subset) const {
  return base_.coloops(lift(subset));
}

std::string RestrictedMatroid::describe() const {
  return "restriction(" + base_.describe() + ",|E|=" + std::to_string(kept_.size()) + ")";
}

ElementSet elements_avoiding(const GroundSet& host, Vertex u) {
  ElementSet out;
  for (std::size_t i = 0; i < host.size(); ++i)
    if (!host[i].edge.contains(u)) out.push_back(static_cast<ElementId>(i));
  return out;
}

VerificationResult verify_weakly_saturated(const MatroidOracle& m, const GroundSet& host,
                                           const PatternFamily& family, const VerifyOptions& options) {
  if (m.ground_size() != host.size()) {
    throw InvalidInput("matroid ground set size " + std::to_string(m.ground_size()) +
                       " does not match host instance count " + std::to_string(host.size()));
  }
  if (family.uniformity != host.uniformity()) throw InvalidInput("family uniformity does not match host");

  VerificationResult result;
  result.all_cycles = true;
  const EdgeCounts counts(host.host());
  for (std::size_t pi = 0; pi < family.size() && result.all_cycles; ++pi) {
    const PatternMatcher matcher(family[pi]);
    std::size_t copies = 0;
    matcher.for_each_copy(counts, [&](std::span<const Vertex> vertex_map) {
      if (options.copy_limit && copies >= *options.copy_limit) {
        result.exhaustive = false;
        return false;
      }
      ++copies;
      ++result.copies_checked;
      const Embedding copy = matcher.make_embedding(vertex_map);
      for_each_instance_choice(copy, family[pi], host, [&](std::span<const std::uint32_t> ids) {
        ++result.instance_sets_checked;
        if (is_cycle(m, ids)) return true;
        result.all_cycles = false;
        result.counterexample = CopyCounterexample{pi, copy, ElementSet(ids.begin(), ids.end())};
        return false;
      });
      return result.all_cycles;
    });
  }
  return result;
}

LowerBound certified_lower_bound(const MatroidOracle& m, const GroundSet& host, const PatternFamily& family,
                                 const VerifyOptions& options) {
  LowerBound lb;
  lb.matroid = m.describe();
  lb.verification = verify_weakly_saturated(m, host, family, options);
  if (!lb.verification.verified()) {
    std::string why = lb.verification.exhaustive ? "a copy is not a cycle" : "copy enumeration was truncated";
    if (lb.verification.counterexample) {
      why += " (pattern " + std::to_string(lb.verification.counterexample->pattern) + ")";
    }
    throw VerificationFailure("matroid " + lb.matroid + " is not verified weakly saturated: " + why);
  }
  lb.rank = rank_full(m);
  return lb;
}

std::size_t lower_bound(const MatroidOracle& m, const GroundSet& host, const PatternFamily& family) {
  return certified_lower_bound(m, host, family).value();
}

bool preservation_check(const MatroidOracle& m, const GroundSet& host, const UniformHypergraph& seed) {
  const ElementSet seed_elements = host.elements_of(seed);
  return rank(m, seed_elements).rank == rank_full(m).rank;
}

}  // namespace wsat
