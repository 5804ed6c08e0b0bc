#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace wsat::cli {

std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t value);
std::string utc_timestamp();

// Appends {"timestamp","command","config_hash","result_digest","exit_code"}
// to $WSAT_LEDGER, or ./runs.ndjson when unset. Failures to write are
// reported on stderr and otherwise ignored.
void append_ledger(const std::string& command, const nlohmann::json& config, const nlohmann::json& result,
                   int exit_code);

}  // namespace wsat::cli
