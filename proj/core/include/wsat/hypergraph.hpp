#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wsat {

using Vertex = std::uint32_t;
using Multiplicity = std::uint32_t;

inline constexpr int kMaxUniformity = 8;

/// Exact binomial coefficient; 0 when k < 0, n < 0 or k > n.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// A strictly increasing tuple of at most kMaxUniformity vertices.
///
/// Edges are ordered colexicographically: the largest vertex is compared
/// first. This is the order in which all edge lists in the library are kept.
class Edge {
 public:
  Edge() = default;
  /// Sorts the vertices; throws InvalidInput on repeats or oversize tuples.
  explicit Edge(std::span<const Vertex> vertices);
  Edge(std::initializer_list<Vertex> vertices);

  int size() const noexcept { return size_; }
  Vertex operator[](int i) const noexcept { return vertices_[static_cast<std::size_t>(i)]; }
  std::span<const Vertex> vertices() const noexcept {
    return {vertices_.data(), static_cast<std::size_t>(size_)};
  }
  Vertex max_vertex() const noexcept { return size_ == 0 ? 0 : vertices_[size_ - 1]; }
  bool contains(Vertex v) const noexcept;

  /// Rank of this tuple in the colex order of all size()-subsets of N.
  std::uint64_t colex_rank() const noexcept;
  /// Inverse of colex_rank for r-subsets.
  static Edge from_colex_rank(std::uint64_t rank, int r);

  std::string to_string() const;

  friend bool operator==(const Edge& a, const Edge& b) noexcept;
  friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) noexcept;

 private:
  std::array<Vertex, kMaxUniformity> vertices_{};
  std::uint8_t size_ = 0;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept;
};

/// One instance of a (multi)edge. Two instances of the same edge are distinct
/// matroid ground-set elements.
struct EdgeInstance {
  Edge edge;
  Multiplicity instance = 0;

  friend bool operator==(const EdgeInstance&, const EdgeInstance&) = default;
  friend auto operator<=>(const EdgeInstance&, const EdgeInstance&) = default;
};

/// An r-uniform multi-hypergraph on vertices [0, n). r = 2 is a (multi)graph.
///
/// Immutable once built. Edges are stored once each, in colex order, with a
/// positive multiplicity.
class UniformHypergraph {
 public:
  UniformHypergraph() = default;
  /// Empty hypergraph.
  UniformHypergraph(int r, Vertex n);
  /// Throws InvalidInput on wrong edge size, out-of-range vertex, duplicate
  /// edge, or zero multiplicity. Missing multiplicities default to 1.
  UniformHypergraph(int r, Vertex n, std::vector<Edge> edges,
                    std::vector<Multiplicity> multiplicities = {});

  int uniformity() const noexcept { return r_; }
  Vertex vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t instance_count() const noexcept { return instances_; }
  bool empty() const noexcept { return edges_.empty(); }
  bool is_simple() const noexcept { return instances_ == edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Multiplicity> multiplicities() const noexcept { return multiplicities_; }
  Multiplicity multiplicity(std::size_t index) const { return multiplicities_.at(index); }

  std::optional<std::size_t> find(const Edge& e) const;
  /// 0 when the edge is absent.
  Multiplicity multiplicity_of(const Edge& e) const;

  /// Same vertex set, edgewise multiplicity dominated by `other`.
  bool is_submultiset_of(const UniformHypergraph& other) const;

  /// Number of vertices touched by at least one edge.
  std::size_t touched_vertex_count() const;
  /// Per-vertex sum of multiplicities of incident edges.
  std::vector<std::uint64_t> degrees() const;

  friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

 private:
  int r_ = 2;
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Multiplicity> multiplicities_;
  std::size_t instances_ = 0;
};

/// The family of patterns percolation runs against.
struct PatternFamily {
  int uniformity = 2;
  std::vector<UniformHypergraph> patterns;
  std::vector<std::string> labels;

  PatternFamily() = default;
  /// Throws InvalidInput if empty, mixed uniformity, or an edgeless pattern.
  explicit PatternFamily(std::vector<UniformHypergraph> members,
                         std::vector<std::string> member_labels = {});

  std::size_t size() const noexcept { return patterns.size(); }
  const UniformHypergraph& operator[](std::size_t i) const { return patterns.at(i); }
};

/// The ordered instances of a host: element i of every matroid built on the
/// host is instances()[i]. Edges appear in colex order, instances ascending.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(const UniformHypergraph& host);

  std::size_t size() const noexcept { return instances_.size(); }
  const EdgeInstance& operator[](std::size_t i) const { return instances_.at(i); }
  std::span<const EdgeInstance> instances() const noexcept { return instances_; }

  /// Element id of instance `instance` of host edge number `edge_index`.
  std::uint32_t element(std::size_t edge_index, Multiplicity instance) const;
  /// Host edge number of an element.
  std::size_t edge_index(std::uint32_t element) const { return edge_of_.at(element); }
  /// Ids of the lowest instances realizing a sub-multiset of the host.
  std::vector<std::uint32_t> elements_of(const UniformHypergraph& sub) const;

  const UniformHypergraph& host() const noexcept { return host_; }
  int uniformity() const noexcept { return host_.uniformity(); }
  Vertex vertex_count() const noexcept { return host_.vertex_count(); }

 private:
  UniformHypergraph host_;
  std::vector<EdgeInstance> instances_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::size_t> edge_of_;
};

}  // namespace wsat
