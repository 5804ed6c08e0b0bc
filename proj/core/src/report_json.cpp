#include "wsat/report_json.hpp"

#include "wsat/io.hpp"

namespace wsat {

using nlohmann::json;

json to_json(const Edge& e) { return json(std::vector<Vertex>(e.vertices().begin(), e.vertices().end())); }

json to_json(const Embedding& e) {
  json instances = json::array();
  for (const EdgeInstance& inst : e.instance_map) instances.push_back({{"edge", to_json(inst.edge)}, {"instance", inst.instance}});
  return {{"vertex_map", e.vertex_map}, {"instances", instances}};
}

json to_json(const ClosureReport& r) {
  json trace = json::array();
  for (const TraceStep& s : r.trace)
    trace.push_back({{"edge", to_json(s.edge)}, {"instance", s.instance}, {"pattern", s.pattern}});
  return {{"percolated", r.percolated}, {"final_graph", to_json(r.final_graph)}, {"trace", trace}};
}

json to_json(const RankReport& r) { return {{"rank", r.rank}, {"subset", r.subset}, {"basis", r.basis}}; }

json to_json(const VerificationResult& r) {
  json j = {{"verified", r.verified()},
            {"all_cycles", r.all_cycles},
            {"exhaustive", r.exhaustive},
            {"copies_checked", r.copies_checked},
            {"instance_sets_checked", r.instance_sets_checked}};
  if (r.counterexample) {
    j["counterexample"] = {{"pattern", r.counterexample->pattern},
                           {"copy", to_json(r.counterexample->copy)},
                           {"elements", r.counterexample->elements}};
  }
  return j;
}

json to_json(const WsatReport& r) {
  json bounds = json::array();
  for (const auto& b : r.lower_bounds) bounds.push_back({{"matroid", b.matroid}, {"rank", b.rank}, {"verified", b.verified}});
  return {{"value", r.value},   {"exact", r.exact},         {"lower", r.lower},
          {"upper", r.upper},   {"method", r.method},       {"timed_out", r.timed_out},
          {"nodes", r.nodes},   {"lower_bounds", bounds},   {"certificate", to_json(r.certificate)}};
}

json to_json(const LiftReport& r) {
  json j = {{"k", r.k},
            {"matroid", r.matroid},
            {"rank", r.rank},
            {"bound", r.bound},
            {"verification", to_json(r.verification)},
            {"host", to_json(r.host)},
            {"family_size", r.family.size()}};
  if (r.upper) {
    j["upper"] = *r.upper;
    j["tight"] = r.tight();
  }
  return j;
}

json to_json(const SharpnessWitness& w) {
  return {{"sharpness", w.value}, {"edge", to_json(w.edge)}, {"subset", w.subset}};
}

json to_json(const AffineFit& f) {
  json samples = json::array();
  for (const auto& [n, v] : f.samples) samples.push_back({n, v});
  return {{"slope", f.slope}, {"intercept", f.intercept}, {"onset", f.onset}, {"valid", f.valid}, {"samples", samples}};
}

json to_json(const RemarkSummary& s) {
  json trials = json::array();
  for (const auto& t : s.trials) {
    trials.push_back({{"seed", t.seed},
                      {"edges", t.edges},
                      {"property_held", t.property_held},
                      {"timed_out", t.timed_out},
                      {"wsat_gn", t.wsat_gn ? json(*t.wsat_gn) : json(nullptr)}});
  }
  return {{"n", s.n},
          {"p", s.p},
          {"wsat_kn", s.wsat_kn},
          {"with_property", s.with_property()},
          {"property_and_at_least", s.property_and_at_least()},
          {"violations", s.violations()},
          {"skipped", s.skipped()},
          {"trials", trials}};
}

}  // namespace wsat
