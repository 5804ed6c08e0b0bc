#include "wsat/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "wsat/edge_counts.hpp"
#include "wsat/error.hpp"
#include "wsat/generators.hpp"
#include "wsat/hyper_tools.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

namespace {

using Clock = std::chrono::steady_clock;

// Edges of `candidate` that the host has, with the host's multiplicities.
UniformHypergraph restrict_to_host(const UniformHypergraph& candidate, const UniformHypergraph& host) {
  std::vector<Edge> edges;
  std::vector<Multiplicity> mult;
  for (const Edge& e : candidate.edges()) {
    if (auto idx = host.find(e)) {
      edges.push_back(e);
      mult.push_back(host.multiplicity(*idx));
    }
  }
  return UniformHypergraph(host.uniformity(), host.vertex_count(), std::move(edges), std::move(mult));
}

UniformHypergraph disjoint_cliques(Vertex n, int r, Vertex block) {
  std::vector<Edge> edges;
  const UniformHypergraph kn = make_clique(n, r);
  for (const Edge& e : kn.edges())
    if (e[0] / block == e.max_vertex() / block) edges.push_back(e);
  return UniformHypergraph(r, n, std::move(edges));
}

// Drops single instances in reverse colex order while the seed still percolates.
UniformHypergraph prune(const UniformHypergraph& host, const UniformHypergraph& seed, const FamilyMatcher& fm) {
  EdgeCounts current(seed);
  for (std::size_t i = seed.edge_count(); i-- > 0;) {
    const Edge& e = seed.edges()[i];
    while (current.get(e) > 0) {
      current.decrement(e);
      EdgeCounts trial = current;
      if (!close_in_place(host, trial, fm)) {
        current.increment(e);
        break;
      }
    }
  }
  return current.to_hypergraph();
}

struct VerifiedOracle {
  const MatroidOracle* oracle;
  std::size_t full_rank;
};

std::vector<VerifiedOracle> verify_oracles(const GroundSet& ground, const PatternFamily& family,
                                           std::span<const MatroidOracle* const> oracles,
                                           std::vector<LowerBoundProvenance>& provenance) {
  std::vector<VerifiedOracle> out;
  for (const MatroidOracle* m : oracles) {
    LowerBoundProvenance p;
    p.matroid = m->describe();
    p.verified = verify_weakly_saturated(*m, ground, family).verified();
    p.rank = rank_full(*m).rank;
    if (p.verified) out.push_back({m, p.rank});
    provenance.push_back(std::move(p));
  }
  return out;
}

void check_certificate(const UniformHypergraph& host, const FamilyMatcher& fm, const WsatReport& report) {
  if (report.certificate.instance_count() != report.upper) {
    throw VerificationFailure("certificate size does not match the reported upper bound");
  }
  if (!is_weakly_saturated(host, report.certificate, fm)) {
    throw VerificationFailure("solver certificate does not percolate");
  }
}

void check_inputs(const UniformHypergraph& host, const PatternFamily& family) {
  if (host.uniformity() != family.uniformity) throw InvalidInput("family uniformity does not match host");
}

}  // namespace

WsatReport wsat_exhaustive(const UniformHypergraph& host, const PatternFamily& family, const SolverOptions&) {
  check_inputs(host, family);
  if (host.instance_count() > kExhaustiveInstanceCap) {
    throw InvalidInput("exhaustive search is capped at " + std::to_string(kExhaustiveInstanceCap) +
                       " host instances (host has " + std::to_string(host.instance_count()) + ")");
  }
  const FamilyMatcher fm(family);
  const std::size_t m = host.edge_count();
  WsatReport report;
  report.method = "exhaustive";

  // Count vectors over host edges with the given total, in lexicographic order.
  std::vector<Multiplicity> counts(m, 0);
  std::optional<UniformHypergraph> found;
  std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t left) -> bool {
    if (i == m) {
      if (left != 0) return false;
      ++report.nodes;
      EdgeCounts state(host.uniformity(), host.vertex_count());
      for (std::size_t j = 0; j < m; ++j)
        if (counts[j]) state.set(host.edges()[j], counts[j]);
      EdgeCounts closed = state;
      if (close_in_place(host, closed, fm)) {
        found = state.to_hypergraph();
        return true;
      }
      return false;
    }
    const Multiplicity top = std::min<Multiplicity>(host.multiplicity(i), static_cast<Multiplicity>(left));
    for (Multiplicity c = 0; c <= top; ++c) {
      counts[i] = c;
      if (place(i + 1, left - c)) return true;
    }
    counts[i] = 0;
    return false;
  };

  for (std::size_t size = 0; size <= host.instance_count(); ++size) {
    if (place(0, size)) break;
  }
  report.certificate = *found;
  report.value = report.lower = report.upper = found->instance_count();
  report.exact = true;
  check_certificate(host, fm, report);
  return report;
}

WsatReport greedy_upper(const UniformHypergraph& host, const PatternFamily& family, UpperStrategy strategy) {
  check_inputs(host, family);
  const FamilyMatcher fm(family);
  const Vertex n = host.vertex_count();
  const int r = host.uniformity();

  std::vector<UniformHypergraph> candidates;
  if (n >= static_cast<Vertex>(r)) {
    for (Vertex block = static_cast<Vertex>(r); block < n; ++block) {
      candidates.push_back(restrict_to_host(disjoint_cliques(n, r, block), host));
    }
    std::set<std::vector<Edge>> seen_patterns;
    for (const auto& p : family.patterns) {
      const UniformHypergraph simple = underlying_simple(p);
      if (!seen_patterns.insert(std::vector<Edge>(simple.edges().begin(), simple.edges().end())).second) continue;
      if (r == 2 && n >= p.vertex_count() + 2) candidates.push_back(restrict_to_host(join_construction(n, simple), host));
      if (n >= p.vertex_count()) {
        candidates.push_back(restrict_to_host(hyper_construction(n, simple, sharpness(simple).value), host));
      }
    }
  }

  std::optional<UniformHypergraph> best;
  for (const auto& c : candidates) {
    if (best && c.instance_count() >= best->instance_count()) continue;
    if (is_weakly_saturated(host, c, fm)) best = c;
  }
  if (!best) best = host;
  if (strategy == UpperStrategy::kPruned) best = prune(host, *best, fm);

  WsatReport report;
  report.method = "greedy";
  report.certificate = *best;
  report.value = report.upper = best->instance_count();
  check_certificate(host, fm, report);
  return report;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const UniformHypergraph& host, const PatternFamily& family, std::vector<VerifiedOracle> oracles,
                 const SolverOptions& options)
      : host_(host),
        fm_(family),
        ground_(host),
        oracles_(std::move(oracles)),
        seed_(host.uniformity(), host.vertex_count()),
        available_(host),
        deadline_(options.timeout_seconds > 0
                      ? std::optional(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                         std::chrono::duration<double>(options.timeout_seconds)))
                      : std::nullopt) {
    // Edges with more pattern copies through them come first.
    std::vector<std::uint64_t> copies(host.edge_count(), 0);
    const EdgeCounts counts(host);
    for (const PatternMatcher& pm : fm_.matchers()) {
      pm.for_each_copy(counts, [&](std::span<const Vertex> map) {
        const Embedding emb = pm.make_embedding(map);
        for (const Edge& f : pm.pattern().edges()) ++copies[*host.find(emb.image(f))];
        return true;
      });
    }
    std::vector<std::size_t> edges(host.edge_count());
    std::iota(edges.begin(), edges.end(), std::size_t{0});
    std::stable_sort(edges.begin(), edges.end(), [&](std::size_t a, std::size_t b) { return copies[a] > copies[b]; });
    for (std::size_t e : edges)
      for (Multiplicity j = 0; j < host.multiplicity(e); ++j) order_.push_back({e, j});
  }

  std::size_t root_lower() const {
    std::size_t lb = 0;
    for (const auto& o : oracles_) lb = std::max(lb, o.full_rank);
    return lb;
  }

  void run(const UniformHypergraph& incumbent) {
    best_ = incumbent;
    incumbent_size_ = incumbent.instance_count();
    search(0);
  }

  bool timed_out() const noexcept { return timed_out_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  const UniformHypergraph& best() const noexcept { return best_; }

 private:
  struct Slot {
    std::size_t edge;
    Multiplicity instance;
  };

  std::size_t node_lower() const {
    std::size_t need = 0;
    for (const auto& o : oracles_) {
      const std::size_t r = o.oracle->basis(seed_elements_).size();
      need = std::max(need, o.full_rank - r);
    }
    return seed_elements_.size() + need;
  }

  void search(std::size_t pos) {
    if (timed_out_) return;
    ++nodes_;
    if (deadline_ && (nodes_ & 63) == 0 && Clock::now() > *deadline_) {
      timed_out_ = true;
      return;
    }

    EdgeCounts closed = seed_;
    if (close_in_place(host_, closed, fm_)) {
      if (seed_elements_.size() < incumbent_size_) {
        incumbent_size_ = seed_elements_.size();
        best_ = seed_.to_hypergraph();
      }
      return;
    }
    // Not percolating yet: at least one more instance is needed.
    if (seed_elements_.size() + 1 >= incumbent_size_) return;
    if (node_lower() >= incumbent_size_) return;

    // Skip slots already excluded by an earlier exclusion of the same edge.
    while (pos < order_.size() && available_.get(host_.edges()[order_[pos].edge]) <= order_[pos].instance) ++pos;
    if (pos == order_.size()) return;

    {
      EdgeCounts everything = available_;
      if (!close_in_place(host_, everything, fm_)) return;
    }

    const Slot slot = order_[pos];
    const Edge& e = host_.edges()[slot.edge];
    const bool last_instance = slot.instance + 1 == host_.multiplicity(slot.edge);
    // An instance already in the closure of the seed adds nothing when no
    // further instance of its edge can follow.
    const bool redundant = last_instance && closed.get(e) > seed_.get(e);

    if (!redundant) {
      seed_.increment(e);
      seed_elements_.push_back(ground_.element(slot.edge, slot.instance));
      search(pos + 1);
      seed_elements_.pop_back();
      seed_.decrement(e);
    }

    const Multiplicity keep = available_.get(e);
    available_.set(e, slot.instance);
    search(pos + 1);
    available_.set(e, keep);
  }

  const UniformHypergraph& host_;
  FamilyMatcher fm_;
  GroundSet ground_;
  std::vector<VerifiedOracle> oracles_;
  std::vector<Slot> order_;
  EdgeCounts seed_;
  EdgeCounts available_;
  ElementSet seed_elements_;
  std::optional<Clock::time_point> deadline_;
  UniformHypergraph best_;
  std::size_t incumbent_size_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

WsatReport wsat_bnb(const UniformHypergraph& host, const PatternFamily& family,
                    std::span<const MatroidOracle* const> lower_oracles, const SolverOptions& options) {
  check_inputs(host, family);
  WsatReport report;
  const GroundSet ground(host);
  auto verified = verify_oracles(ground, family, lower_oracles, report.lower_bounds);

  const WsatReport upper = greedy_upper(host, family);
  BranchAndBound bnb(host, family, std::move(verified), options);
  const std::size_t root_lower = bnb.root_lower();
  if (root_lower > upper.upper) {
    throw VerificationFailure("verified lower bound exceeds a percolating seed; a matroid or the engine is wrong");
  }

  if (root_lower == upper.upper) {
    report.method = "bounds-met";
    report.certificate = upper.certificate;
    report.exact = true;
    report.value = report.lower = report.upper = upper.upper;
  } else {
    bnb.run(upper.certificate);
    report.method = "bnb";
    report.nodes = bnb.nodes();
    report.certificate = bnb.best();
    report.upper = report.value = bnb.best().instance_count();
    report.timed_out = bnb.timed_out();
    report.exact = !report.timed_out;
    report.lower = report.exact ? report.upper : root_lower;
  }
  check_certificate(host, FamilyMatcher(family), report);
  return report;
}

WsatReport wsat_bounds(const UniformHypergraph& host, const PatternFamily& family,
                       std::span<const MatroidOracle* const> lower_oracles) {
  check_inputs(host, family);
  WsatReport report;
  const GroundSet ground(host);
  const auto verified = verify_oracles(ground, family, lower_oracles, report.lower_bounds);
  for (const auto& o : verified) report.lower = std::max(report.lower, o.full_rank);
  const WsatReport upper = greedy_upper(host, family);
  if (report.lower > upper.upper) {
    throw VerificationFailure("verified lower bound exceeds a percolating seed; a matroid or the engine is wrong");
  }
  report.certificate = upper.certificate;
  report.upper = report.value = upper.upper;
  report.exact = report.lower == report.upper;
  report.method = report.exact ? "bounds-met" : "greedy";
  return report;
}

}  // namespace wsat
