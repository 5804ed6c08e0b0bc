#include "wsat/percolation.hpp"

#include <algorithm>
#include <numeric>

#include "wsat/error.hpp"
#include "wsat/generators.hpp"

namespace wsat {

FamilyMatcher::FamilyMatcher(const PatternFamily& family) : family_(family) {
  matchers_.reserve(family.size());
  for (const auto& p : family.patterns) matchers_.emplace_back(p);
}

std::optional<std::size_t> FamilyMatcher::witness(const EdgeCounts& state, const Edge& anchor) const {
  for (std::size_t i = 0; i < matchers_.size(); ++i)
    if (matchers_[i].exists_through(state, anchor)) return i;
  return std::nullopt;
}

bool close_in_place(const UniformHypergraph& host, EdgeCounts& state, const FamilyMatcher& family) {
  std::uint64_t missing = host.instance_count() - state.total();
  bool changed = missing > 0;
  while (changed && missing > 0) {
    changed = false;
    for (std::size_t idx = 0; idx < host.edge_count() && missing > 0; ++idx) {
      const Edge& e = host.edges()[idx];
      while (missing > 0 && state.get(e) < host.multiplicity(idx)) {
        state.increment(e);
        if (!family.witness(state, e)) {
          state.decrement(e);
          break;
        }
        changed = true;
        --missing;
      }
    }
  }
  return missing == 0;
}

ClosureReport closure(const UniformHypergraph& host, const UniformHypergraph& start, const FamilyMatcher& family,
                      const ClosureOptions& options) {
  if (host.uniformity() != family.family().uniformity) {
    throw InvalidInput("family uniformity does not match host");
  }
  if (!start.is_submultiset_of(host)) throw InvalidInput("start graph is not contained in the host");

  std::vector<std::size_t> order = options.scan_order;
  if (order.empty()) {
    order.resize(host.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else {
    std::vector<std::size_t> check = order;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
      if (check[i] != i || check.size() != host.edge_count()) throw InvalidInput("scan order is not a permutation");
  }

  EdgeCounts state(start);
  ClosureReport report;
  std::uint64_t missing = host.instance_count() - start.instance_count();
  bool changed = missing > 0;
  while (changed) {
    changed = false;
    for (std::size_t idx : order) {
      const Edge& e = host.edges()[idx];
      while (state.get(e) < host.multiplicity(idx)) {
        const Multiplicity instance = state.get(e);
        state.increment(e);
        auto w = family.witness(state, e);
        if (!w) {
          state.decrement(e);
          break;
        }
        changed = true;
        --missing;
        if (!options.decide_only) report.trace.push_back({e, instance, *w});
        if (missing == 0) break;
      }
      if (missing == 0) break;
    }
    if (missing == 0) break;
  }
  report.percolated = missing == 0;
  report.final_graph = report.percolated ? host : state.to_hypergraph();
  return report;
}

ClosureReport closure(const UniformHypergraph& host, const UniformHypergraph& start, const PatternFamily& family,
                      const ClosureOptions& options) {
  return closure(host, start, FamilyMatcher(family), options);
}

bool is_weakly_saturated(const UniformHypergraph& host, const UniformHypergraph& start,
                         const FamilyMatcher& family) {
  ClosureOptions options;
  options.decide_only = true;
  return closure(host, start, family, options).percolated;
}

bool is_weakly_saturated(const UniformHypergraph& host, const UniformHypergraph& start,
                         const PatternFamily& family) {
  return is_weakly_saturated(host, start, FamilyMatcher(family));
}

bool replay_trace(const UniformHypergraph& host, const UniformHypergraph& start, const PatternFamily& family,
                  const ClosureReport& report) {
  EdgeCounts state(start);
  for (const TraceStep& step : report.trace) {
    if (step.pattern >= family.size()) return false;
    if (state.get(step.edge) != step.instance || host.multiplicity_of(step.edge) <= step.instance) return false;
    state.increment(step.edge);
    if (!exists_copy_through(state.to_hypergraph(), family[step.pattern], step.edge)) return false;
  }
  return state.to_hypergraph() == report.final_graph;
}

UniformHypergraph join_construction(Vertex n, const UniformHypergraph& pattern) {
  if (pattern.uniformity() != 2) throw InvalidInput("join construction is defined for graphs");
  const Vertex v = pattern.vertex_count();
  if (n < v + 2) throw InvalidInput("join construction needs n >= |V(F)| + 2");
  return hyper_construction(n, pattern, 2);
}

UniformHypergraph hyper_construction(Vertex n, const UniformHypergraph& pattern, int s) {
  const int r = pattern.uniformity();
  const Vertex v = pattern.vertex_count();
  if (s < 0 || s > r) throw InvalidInput("sharpness parameter must lie in [0, r]");
  if (n < v || n < static_cast<Vertex>(r)) throw InvalidInput("host must have at least |V(F)| vertices");
  const UniformHypergraph full = make_clique(n, r);
  std::vector<Edge> kept;
  for (const Edge& e : full.edges()) {
    int outside = 0;
    for (Vertex x : e.vertices()) outside += x >= v ? 1 : 0;
    if (outside <= s - 1) kept.push_back(e);
  }
  return UniformHypergraph(r, n, std::move(kept));
}

}  // namespace wsat
