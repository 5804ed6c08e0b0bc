#include "inputs.hpp"

#include <charconv>
#include <filesystem>
#include <optional>
#include <vector>

#include "wsat/error.hpp"
#include "wsat/generators.hpp"
#include "wsat/hyper_tools.hpp"
#include "wsat/io.hpp"

namespace wsat::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = s.find(sep, begin);
    out.push_back(s.substr(begin, end - begin));
    if (end == std::string::npos) return out;
    begin = end + 1;
  }
}

std::uint32_t number(const std::string& token, const std::string& text) {
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InvalidInput("bad number '" + token + "' in '" + text + "'");
  }
  return value;
}

std::optional<UniformHypergraph> generator(const std::string& text) {
  const auto parts = split(text, ':');
  const std::string& kind = parts[0];
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi) throw InvalidInput("wrong argument count in '" + text + "'");
  };
  auto arg = [&](std::size_t i) { return number(parts.at(i), text); };
  if (kind == "clique") {
    arity(1, 2);
    return make_clique(arg(1), parts.size() == 3 ? static_cast<int>(arg(2)) : 2);
  }
  if (kind == "dumbbell") {
    arity(1, 1);
    return make_dumbbell(arg(1));
  }
  if (kind == "biclique") {
    arity(2, 2);
    return make_biclique(arg(1), arg(2));
  }
  if (kind == "cycle") {
    arity(1, 1);
    return make_cycle(arg(1));
  }
  if (kind == "appendix") {
    arity(3, 3);
    return appendix_family(static_cast<int>(arg(1)), arg(2), arg(3)).family;
  }
  return std::nullopt;
}

bool looks_like_generator(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  const std::string kind = text.substr(0, colon);
  return kind == "clique" || kind == "dumbbell" || kind == "biclique" || kind == "cycle" || kind == "appendix";
}

}  // namespace

UniformHypergraph resolve_hypergraph(const std::string& text) {
  if (looks_like_generator(text)) return *generator(text);
  if (!std::filesystem::exists(text)) throw InvalidInput("no such file or generator: " + text);
  return load_hypergraph(text);
}

PatternFamily resolve_family(const std::string& text) {
  if (looks_like_generator(text)) return PatternFamily({*generator(text)}, {text});
  if (!std::filesystem::exists(text)) throw InvalidInput("no such file or generator: " + text);
  return load_family(text);
}

}  // namespace wsat::cli
