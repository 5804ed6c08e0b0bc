#pragma once

#include <nlohmann/json.hpp>

#include "wsat/experiments.hpp"
#include "wsat/hyper_tools.hpp"
#include "wsat/lift.hpp"
#include "wsat/matroid.hpp"
#include "wsat/percolation.hpp"
#include "wsat/solver.hpp"

namespace wsat {

// JSON renderings of result records. Output is deterministic for equal inputs.

nlohmann::json to_json(const Edge& e);
nlohmann::json to_json(const Embedding& e);
nlohmann::json to_json(const ClosureReport& r);
nlohmann::json to_json(const RankReport& r);
nlohmann::json to_json(const VerificationResult& r);
nlohmann::json to_json(const WsatReport& r);
nlohmann::json to_json(const LiftReport& r);
nlohmann::json to_json(const SharpnessWitness& w);
nlohmann::json to_json(const AffineFit& f);
nlohmann::json to_json(const RemarkSummary& s);

}  // namespace wsat
