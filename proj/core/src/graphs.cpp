#include "vcldim/graphs.hpp"

#include "vcldim/error.hpp"

namespace vcldim {

BipartiteGraph BipartiteGraph::complete(std::size_t n_a, std::size_t n_b) {
  BitMatrix m(n_a, n_b);
  for (std::size_t a = 0; a < n_a; ++a) m.row(a) = BitRow(n_b, true);
  return BipartiteGraph(std::move(m));
}

bool BipartiteGraph::is_subgraph_of(const BipartiteGraph& other) const {
  if (n_a() != other.n_a() || n_b() != other.n_b()) return false;
  for (std::size_t a = 0; a < n_a(); ++a) {
    if (!neighbors(a).is_subset_of(other.neighbors(a))) return false;
  }
  return true;
}

void UndirectedGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw InvalidArgument("self-loop on vertex " + std::to_string(u));
  adj_.set(u, v, true);
  adj_.set(v, u, true);
}

bool UndirectedGraph::is_clique(const std::vector<std::size_t>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

BipartiteGraph class_to_graph(const ConceptClass& c) { return BipartiteGraph(c.matrix()); }

ConceptClass graph_to_class(const BipartiteGraph& g) { return ConceptClass(g.adjacency()); }

}  // namespace vcldim
