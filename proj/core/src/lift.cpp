#include "wsat/lift.hpp"

#include "wsat/error.hpp"
#include "wsat/generators.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

namespace {

void check_simple_graph(const UniformHypergraph& g, const char* what) {
  if (g.uniformity() != 2) throw InvalidInput(std::string(what) + " must be a graph (r = 2)");
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.multiplicity(i) != 1) throw InvalidInput(std::string(what) + " must be simple");
}

}  // namespace

LiftReport lift_bound(const UniformHypergraph& g, const UniformHypergraph& f, Multiplicity k,
                      const MatroidOracle& m) {
  check_simple_graph(g, "host");
  check_simple_graph(f, "pattern");
  if (k < 1) throw InvalidInput("lift parameter k must be positive");

  LiftReport report;
  report.k = k;
  report.host = with_multiplicity(g, k);
  report.family = lift_family(f, k);
  report.matroid = m.describe();

  const GroundSet ground(report.host);
  const LowerBound lb = certified_lower_bound(m, ground, report.family);
  report.verification = lb.verification;
  report.rank = lb.value();
  report.bound = (report.rank + k - 1) / k;
  return report;
}

std::size_t lift_upper_transfer(const UniformHypergraph& g, const UniformHypergraph& f, Multiplicity k,
                                const UniformHypergraph& h) {
  check_simple_graph(g, "host");
  check_simple_graph(f, "pattern");
  if (k < 1) throw InvalidInput("lift parameter k must be positive");
  if (!h.is_submultiset_of(g)) throw InvalidInput("seed is not contained in the host");

  const UniformHypergraph gk = with_multiplicity(g, k);
  const UniformHypergraph hk = with_multiplicity(h, k);
  if (!is_weakly_saturated(gk, hk, lift_family(f, k))) {
    throw VerificationFailure("lifted seed does not percolate in the lifted host");
  }
  return static_cast<std::size_t>(k) * h.instance_count();
}

}  // namespace wsat
