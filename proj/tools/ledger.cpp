#include "ledger.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>

namespace wsat::cli {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void append_ledger(const std::string& command, const nlohmann::json& config, const nlohmann::json& result,
                   int exit_code) {
  const char* env = std::getenv("WSAT_LEDGER");
  const std::string path = env && *env ? env : "runs.ndjson";
  const nlohmann::json line = {{"timestamp", utc_timestamp()},
                               {"command", command},
                               {"config_hash", hex64(fnv1a(config.dump()))},
                               {"result_digest", hex64(fnv1a(result.dump()))},
                               {"exit_code", exit_code}};
  std::ofstream out(path, std::ios::app);
  if (!out) {
    std::cerr << "warning: cannot append to ledger " << path << "\n";
    return;
  }
  out << line.dump() << "\n";
}

}  // namespace wsat::cli
