#pragma once

#include <string>

#include "wsat/hypergraph.hpp"

namespace wsat::cli {

// Built-in generators: clique:<n>, clique:<n>:<r>, dumbbell:<k>,
// biclique:<s>:<t>, cycle:<l>, appendix:<r>:<v1>:<v2>. Anything else is a path.
UniformHypergraph resolve_hypergraph(const std::string& text);

// A generator, a single-pattern file, or a JSON family file.
PatternFamily resolve_family(const std::string& text);

}  // namespace wsat::cli
