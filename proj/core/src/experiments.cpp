#include "wsat/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "wsat/error.hpp"
#include "wsat/generators.hpp"
#include "wsat/solver.hpp"

namespace wsat {

AffineFit affine_tail_fit(std::vector<std::pair<std::int64_t, std::int64_t>> samples) {
  if (samples.size() < 3) throw InvalidInput("affine fit needs at least three samples");
  std::sort(samples.begin(), samples.end());
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].first == samples[i - 1].first) throw InvalidInput("affine fit samples repeat an n");

  AffineFit fit;
  fit.samples = std::move(samples);
  const auto& last = fit.samples.back();
  const auto& prev = fit.samples[fit.samples.size() - 2];
  if (last.first != prev.first + 1) throw InvalidInput("the last two samples must have consecutive n");
  fit.slope = last.second - prev.second;
  fit.intercept = last.second - fit.slope * last.first;

  std::size_t agree = 0;
  for (auto it = fit.samples.rbegin(); it != fit.samples.rend(); ++it) {
    if (it->second != fit.slope * it->first + fit.intercept) break;
    fit.onset = it->first;
    ++agree;
  }
  fit.valid = agree >= 3;
  return fit;
}

UniformHypergraph gnp_sample(Vertex n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  const UniformHypergraph kn = n >= 2 ? make_clique(n, 2) : UniformHypergraph(2, n);
  for (const Edge& e : kn.edges()) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p) edges.push_back(e);
  }
  return UniformHypergraph(2, n, std::move(edges));
}

bool clique_minus_edge_property(const UniformHypergraph& g, Vertex v) {
  if (g.uniformity() != 2) throw InvalidInput("clique-minus-edge property is defined for graphs");
  const Vertex n = g.vertex_count();
  if (v < 2 || v > n) return false;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;

  // Extends {x, y} by v - 2 further vertices forming a clique with both ends.
  std::vector<Vertex> chosen;
  std::function<bool(Vertex, Vertex, Vertex)> extend = [&](Vertex x, Vertex y, Vertex from) -> bool {
    if (chosen.size() + 2 == v) return true;
    for (Vertex w = from; w < n; ++w) {
      if (w == x || w == y || !adj[w][x] || !adj[w][y]) continue;
      bool ok = true;
      for (Vertex c : chosen) ok = ok && adj[w][c];
      if (!ok) continue;
      chosen.push_back(w);
      if (extend(x, y, w + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      chosen.clear();
      if (!extend(x, y, 0)) return false;
    }
  }
  return true;
}

std::size_t RemarkSummary::skipped() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.timed_out; }));
}

std::size_t RemarkSummary::with_property() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.property_held && t.wsat_gn; }));
}

std::size_t RemarkSummary::property_and_at_least() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [&](const auto& t) {
    return t.property_held && t.wsat_gn && *t.wsat_gn >= wsat_kn;
  }));
}

std::size_t RemarkSummary::violations() const { return with_property() - property_and_at_least(); }

RemarkSummary remark_check(Vertex n, double p, const UniformHypergraph& f, const RemarkOptions& options) {
  if (f.uniformity() != 2) throw InvalidInput("remark check is defined for graphs");
  const PatternFamily family({f});
  SolverOptions solver;
  solver.timeout_seconds = options.timeout_seconds;

  RemarkSummary summary;
  summary.n = n;
  summary.p = p;
  const WsatReport kn = wsat_bnb(make_clique(n, 2), family, {}, solver);
  if (!kn.exact) throw InvalidInput("wsat(K_n, F) did not finish within the timeout");
  summary.wsat_kn = kn.value;
  summary.trials.resize(options.trials);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < options.trials; t = next++) {
      RemarkTrial& trial = summary.trials[t];
      trial.seed = options.seed + t;
      const UniformHypergraph g = gnp_sample(n, p, trial.seed);
      trial.edges = g.edge_count();
      trial.property_held = clique_minus_edge_property(g, f.vertex_count());
      const WsatReport r = wsat_bnb(g, family, {}, solver);
      if (r.exact) {
        trial.wsat_gn = r.value;
      } else {
        trial.timed_out = true;
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(options.trials)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return summary;
}

std::string remark_csv(const RemarkSummary& summary) {
  std::ostringstream out;
  out << "seed,n,p,wsat_gn,wsat_kn,property_held\n";
  for (const auto& t : summary.trials) {
    out << t.seed << ',' << summary.n << ',' << summary.p << ',';
    if (t.wsat_gn) out << *t.wsat_gn;
    out << ',' << summary.wsat_kn << ',' << (t.property_held ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace wsat
