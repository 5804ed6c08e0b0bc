#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "wsat/hypergraph.hpp"

namespace wsat {

// Text edge-list format:
//
//   r=<r> n=<n>
//   0 1
//   0 2 x3        <- optional multiplicity token
//
// Blank lines and lines starting with '#' are ignored. Errors carry the line.
UniformHypergraph parse_text(std::string_view text);
/// Normalized text: header, then edges in colex order, "xM" only when M > 1.
std::string serialize_text(const UniformHypergraph& g);

// JSON form: {"r":2,"n":3,"edges":[[0,1],...],"multiplicities":[...]}.
// "multiplicities" is optional on input and written only for multigraphs.
nlohmann::json to_json(const UniformHypergraph& g);
UniformHypergraph hypergraph_from_json(const nlohmann::json& j);

// Pattern families are a JSON list of hypergraph objects, each optionally
// carrying a "label".
nlohmann::json to_json(const PatternFamily& family);
PatternFamily family_from_json(const nlohmann::json& j);

/// JSON if the first non-blank character is '{', text otherwise.
UniformHypergraph load_hypergraph(const std::filesystem::path& path);
/// A JSON list is a family; anything else is loaded as a single pattern.
PatternFamily load_family(const std::filesystem::path& path);

}  // namespace wsat
