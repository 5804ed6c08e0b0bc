#include "wsat/hypergraph.hpp"

#include <algorithm>
#include <numeric>

#include "wsat/error.hpp"

namespace wsat {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * static_cast<Wide>(n - k + i) / static_cast<Wide>(i);
  }
  return static_cast<std::uint64_t>(result);
}

// ---------------------------------------------------------------------------
// Edge

Edge::Edge(std::span<const Vertex> vertices) {
  if (vertices.size() > static_cast<std::size_t>(kMaxUniformity)) {
    throw InvalidInput("edge has more than " + std::to_string(kMaxUniformity) + " vertices");
  }
  size_ = static_cast<std::uint8_t>(vertices.size());
  std::copy(vertices.begin(), vertices.end(), vertices_.begin());
  std::sort(vertices_.begin(), vertices_.begin() + size_);
  if (std::adjacent_find(vertices_.begin(), vertices_.begin() + size_) != vertices_.begin() + size_) {
    throw InvalidInput("edge repeats a vertex");
  }
}

Edge::Edge(std::initializer_list<Vertex> vertices)
    : Edge(std::span<const Vertex>(vertices.begin(), vertices.size())) {}

bool Edge::contains(Vertex v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.begin() + size_, v);
}

namespace {

constexpr Vertex kBinomialRows = 2048;

// C(v, i) for v < kBinomialRows and i <= kMaxUniformity.
const std::vector<std::uint64_t>& binomial_table() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> t(static_cast<std::size_t>(kBinomialRows) * (kMaxUniformity + 1));
    for (Vertex v = 0; v < kBinomialRows; ++v)
      for (int i = 0; i <= kMaxUniformity; ++i) t[v * (kMaxUniformity + 1) + i] = binomial(v, i);
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t Edge::colex_rank() const noexcept {
  const auto& table = binomial_table();
  std::uint64_t rank = 0;
  for (int i = 0; i < size_; ++i) {
    const Vertex v = vertices_[i];
    rank += v < kBinomialRows ? table[v * (kMaxUniformity + 1) + i + 1] : binomial(v, i + 1);
  }
  return rank;
}

Edge Edge::from_colex_rank(std::uint64_t rank, int r) {
  std::array<Vertex, kMaxUniformity> out{};
  for (int i = r; i >= 1; --i) {
    // Largest v with C(v, i) <= rank.
    Vertex v = static_cast<Vertex>(i - 1);
    while (binomial(v + 1, i) <= rank) ++v;
    rank -= binomial(v, i);
    out[static_cast<std::size_t>(i - 1)] = v;
  }
  return Edge(std::span<const Vertex>(out.data(), static_cast<std::size_t>(r)));
}

std::string Edge::to_string() const {
  std::string out = "{";
  for (int i = 0; i < size_; ++i) {
    if (i) out += ',';
    out += std::to_string(vertices_[i]);
  }
  return out + "}";
}

bool operator==(const Edge& a, const Edge& b) noexcept {
  return a.size_ == b.size_ && std::equal(a.vertices_.begin(), a.vertices_.begin() + a.size_,
                                          b.vertices_.begin());
}

std::strong_ordering operator<=>(const Edge& a, const Edge& b) noexcept {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (int i = a.size_ - 1; i >= 0; --i) {
    if (a.vertices_[i] != b.vertices_[i]) return a.vertices_[i] <=> b.vertices_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t EdgeHash::operator()(const Edge& e) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : e.vertices()) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// UniformHypergraph

UniformHypergraph::UniformHypergraph(int r, Vertex n) : r_(r), n_(n) {
  if (r < 1 || r > kMaxUniformity) throw InvalidInput("uniformity out of range: " + std::to_string(r));
}

UniformHypergraph::UniformHypergraph(int r, Vertex n, std::vector<Edge> edges,
                                     std::vector<Multiplicity> multiplicities)
    : UniformHypergraph(r, n) {
  if (multiplicities.empty()) multiplicities.assign(edges.size(), 1);
  if (multiplicities.size() != edges.size()) {
    throw InvalidInput("multiplicity list does not match edge list");
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });

  edges_.reserve(edges.size());
  multiplicities_.reserve(edges.size());
  for (std::size_t i : order) {
    const Edge& e = edges[i];
    if (e.size() != r) {
      throw InvalidInput("edge " + e.to_string() + " does not have " + std::to_string(r) + " vertices");
    }
    if (e.max_vertex() >= n) {
      throw InvalidInput("edge " + e.to_string() + " uses a vertex >= n=" + std::to_string(n));
    }
    if (multiplicities[i] == 0) throw InvalidInput("edge " + e.to_string() + " has multiplicity 0");
    if (!edges_.empty() && edges_.back() == e) throw InvalidInput("duplicate edge " + e.to_string());
    edges_.push_back(e);
    multiplicities_.push_back(multiplicities[i]);
    instances_ += multiplicities[i];
  }
}

std::optional<std::size_t> UniformHypergraph::find(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Multiplicity UniformHypergraph::multiplicity_of(const Edge& e) const {
  auto idx = find(e);
  return idx ? multiplicities_[*idx] : 0;
}

bool UniformHypergraph::is_submultiset_of(const UniformHypergraph& other) const {
  if (r_ != other.r_ || n_ != other.n_) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (other.multiplicity_of(edges_[i]) < multiplicities_[i]) return false;
  }
  return true;
}

std::size_t UniformHypergraph::touched_vertex_count() const {
  std::vector<bool> seen(n_, false);
  for (const Edge& e : edges_)
    for (Vertex v : e.vertices()) seen[v] = true;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

std::vector<std::uint64_t> UniformHypergraph::degrees() const {
  std::vector<std::uint64_t> deg(n_, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (Vertex v : edges_[i].vertices()) deg[v] += multiplicities_[i];
  return deg;
}

// ---------------------------------------------------------------------------
// PatternFamily

PatternFamily::PatternFamily(std::vector<UniformHypergraph> members,
                             std::vector<std::string> member_labels)
    : patterns(std::move(members)), labels(std::move(member_labels)) {
  if (patterns.empty()) throw InvalidInput("pattern family is empty");
  uniformity = patterns.front().uniformity();
  for (const auto& p : patterns) {
    if (p.uniformity() != uniformity) throw InvalidInput("pattern family mixes uniformities");
    if (p.empty()) throw InvalidInput("pattern family contains an edgeless pattern");
  }
  if (!labels.empty() && labels.size() != patterns.size()) {
    throw InvalidInput("pattern labels do not match patterns");
  }
}

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet(const UniformHypergraph& host) : host_(host) {
  offsets_.reserve(host.edge_count() + 1);
  instances_.reserve(host.instance_count());
  edge_of_.reserve(host.instance_count());
  for (std::size_t i = 0; i < host.edge_count(); ++i) {
    offsets_.push_back(static_cast<std::uint32_t>(instances_.size()));
    for (Multiplicity j = 0; j < host.multiplicity(i); ++j) {
      instances_.push_back({host.edges()[i], j});
      edge_of_.push_back(i);
    }
  }
  offsets_.push_back(static_cast<std::uint32_t>(instances_.size()));
}

std::uint32_t GroundSet::element(std::size_t edge_index, Multiplicity instance) const {
  if (edge_index + 1 >= offsets_.size() || offsets_[edge_index] + instance >= offsets_[edge_index + 1]) {
    throw InvalidInput("no such edge instance in ground set");
  }
  return offsets_[edge_index] + instance;
}

std::vector<std::uint32_t> GroundSet::elements_of(const UniformHypergraph& sub) const {
  if (!sub.is_submultiset_of(host_)) throw InvalidInput("subgraph is not contained in the host");
  std::vector<std::uint32_t> out;
  out.reserve(sub.instance_count());
  for (std::size_t i = 0; i < sub.edge_count(); ++i) {
    std::size_t h = *host_.find(sub.edges()[i]);
    for (Multiplicity j = 0; j < sub.multiplicity(i); ++j) out.push_back(offsets_[h] + j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wsat
