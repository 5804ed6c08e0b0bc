#include "wsat/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "wsat/error.hpp"

namespace wsat {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_uint(std::string_view s, T& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

char first_non_blank(std::string_view text) {
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') return c;
  return '\0';
}

}  // namespace

UniformHypergraph parse_text(std::string_view text) {
  int r = 0;
  Vertex n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<Multiplicity> mult;
  std::unordered_map<Edge, std::size_t, EdgeHash> first_seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      bool got_r = false, got_n = false;
      for (auto tok : tokens) {
        if (tok.starts_with("r=") && parse_uint(tok.substr(2), r)) {
          got_r = true;
        } else if (tok.starts_with("n=") && parse_uint(tok.substr(2), n)) {
          got_n = true;
        } else {
          throw ParseError(line_no, "bad header token '" + std::string(tok) + "', expected r=<r> n=<n>");
        }
      }
      if (!got_r || !got_n) throw ParseError(line_no, "header must give both r=<r> and n=<n>");
      if (r < 1 || r > kMaxUniformity) throw ParseError(line_no, "uniformity out of range");
      have_header = true;
      continue;
    }

    Multiplicity m = 1;
    if (tokens.back().front() == 'x') {
      if (!parse_uint(tokens.back().substr(1), m) || m == 0) {
        throw ParseError(line_no, "bad multiplicity token '" + std::string(tokens.back()) + "'");
      }
      tokens.pop_back();
    }
    if (tokens.size() != static_cast<std::size_t>(r)) {
      throw ParseError(line_no, "expected " + std::to_string(r) + " vertex ids, got " +
                                    std::to_string(tokens.size()));
    }
    std::vector<Vertex> vs;
    for (auto tok : tokens) {
      Vertex v = 0;
      if (!parse_uint(tok, v)) throw ParseError(line_no, "bad vertex id '" + std::string(tok) + "'");
      if (v >= n) {
        throw ParseError(line_no, "vertex id " + std::to_string(v) + " >= n=" + std::to_string(n));
      }
      vs.push_back(v);
    }
    Edge e;
    try {
      e = Edge(vs);
    } catch (const InvalidInput& err) {
      throw ParseError(line_no, err.what());
    }
    auto [it, inserted] = first_seen.emplace(e, line_no);
    if (!inserted) {
      throw ParseError(line_no, "duplicate edge " + e.to_string() + " (first on line " +
                                    std::to_string(it->second) + "); use an xM token for multiplicity");
    }
    edges.push_back(e);
    mult.push_back(m);
  }
  if (!have_header) throw ParseError(line_no, "missing r=<r> n=<n> header");
  return UniformHypergraph(r, n, std::move(edges), std::move(mult));
}

std::string serialize_text(const UniformHypergraph& g) {
  std::ostringstream out;
  out << "r=" << g.uniformity() << " n=" << g.vertex_count() << '\n';
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    for (int j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    if (g.multiplicity(i) > 1) out << " x" << g.multiplicity(i);
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const UniformHypergraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(std::vector<Vertex>(e.vertices().begin(), e.vertices().end()));
  }
  nlohmann::json j = {{"r", g.uniformity()}, {"n", g.vertex_count()}, {"edges", std::move(edges)}};
  if (!g.is_simple()) {
    j["multiplicities"] = std::vector<Multiplicity>(g.multiplicities().begin(), g.multiplicities().end());
  }
  return j;
}

UniformHypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    const int r = j.at("r").get<int>();
    const Vertex n = j.at("n").get<Vertex>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      const auto vs = e.get<std::vector<Vertex>>();
      edges.emplace_back(vs);
    }
    std::vector<Multiplicity> mult;
    if (j.contains("multiplicities")) mult = j.at("multiplicities").get<std::vector<Multiplicity>>();
    return UniformHypergraph(r, n, std::move(edges), std::move(mult));
  } catch (const nlohmann::json::exception& err) {
    throw InvalidInput(std::string("malformed hypergraph JSON: ") + err.what());
  }
}

nlohmann::json to_json(const PatternFamily& family) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto j = to_json(family[i]);
    if (!family.labels.empty()) j["label"] = family.labels[i];
    out.push_back(std::move(j));
  }
  return out;
}

PatternFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("pattern family JSON must be a list");
  std::vector<UniformHypergraph> patterns;
  std::vector<std::string> labels;
  bool any_label = false;
  for (const auto& item : j) {
    patterns.push_back(hypergraph_from_json(item));
    any_label = any_label || item.contains("label");
    labels.push_back(item.value("label", std::string{}));
  }
  if (!any_label) labels.clear();
  return PatternFamily(std::move(patterns), std::move(labels));
}

UniformHypergraph load_hypergraph(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (first_non_blank(text) == '{') {
    try {
      return hypergraph_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& err) {
      throw InvalidInput(path.string() + ": " + err.what());
    }
  }
  return parse_text(text);
}

PatternFamily load_family(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (first_non_blank(text) == '[') {
    try {
      return family_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& err) {
      throw InvalidInput(path.string() + ": " + err.what());
    }
  }
  return PatternFamily({load_hypergraph(path)});
}

}  // namespace wsat
