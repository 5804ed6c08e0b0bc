#include "wsat/edge_counts.hpp"

#include <algorithm>

#include "wsat/error.hpp"

namespace wsat {

EdgeCounts::EdgeCounts(int r, Vertex n)
    : r_(r), n_(n), dense_(binomial(n, r) <= kDenseLimit), degree_(n, 0) {
  if (dense_) table_.assign(binomial(n, r), 0);
}

EdgeCounts::EdgeCounts(const UniformHypergraph& g) : EdgeCounts(g.uniformity(), g.vertex_count()) {
  for (std::size_t i = 0; i < g.edge_count(); ++i) set(g.edges()[i], g.multiplicity(i));
}

Multiplicity EdgeCounts::get(const Edge& e) const {
  const std::uint64_t rank = e.colex_rank();
  if (dense_) return table_[rank];
  auto it = sparse_.find(rank);
  return it == sparse_.end() ? 0 : it->second;
}

void EdgeCounts::set(const Edge& e, Multiplicity m) {
  if (e.size() != r_ || e.max_vertex() >= n_) throw InvalidInput("edge " + e.to_string() + " outside host");
  const std::uint64_t rank = e.colex_rank();
  Multiplicity old = 0;
  if (dense_) {
    old = table_[rank];
    table_[rank] = m;
  } else {
    auto it = sparse_.find(rank);
    if (it != sparse_.end()) old = it->second;
    if (m == 0) {
      if (it != sparse_.end()) sparse_.erase(it);
    } else {
      sparse_[rank] = m;
    }
  }
  for (Vertex v : e.vertices()) degree_[v] = degree_[v] - old + m;
  total_ = total_ - old + m;
}

UniformHypergraph EdgeCounts::to_hypergraph() const {
  std::vector<Edge> edges;
  std::vector<Multiplicity> mult;
  if (dense_) {
    for (std::uint64_t rank = 0; rank < table_.size(); ++rank) {
      if (table_[rank]) {
        edges.push_back(Edge::from_colex_rank(rank, r_));
        mult.push_back(table_[rank]);
      }
    }
  } else {
    std::vector<std::pair<std::uint64_t, Multiplicity>> items(sparse_.begin(), sparse_.end());
    std::sort(items.begin(), items.end());
    for (auto [rank, m] : items) {
      edges.push_back(Edge::from_colex_rank(rank, r_));
      mult.push_back(m);
    }
  }
  return UniformHypergraph(r_, n_, std::move(edges), std::move(mult));
}

}  // namespace wsat
