#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vcldim/bit_row.hpp"
#include "vcldim/concept_class.hpp"

namespace vcldim {

// Bipartite graph (A, B, E); row a of the adjacency matrix is N(a) over B.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t n_a, std::size_t n_b) : adj_(n_a, n_b) {}
  explicit BipartiteGraph(BitMatrix adj) : adj_(std::move(adj)) {}

  static BipartiteGraph complete(std::size_t n_a, std::size_t n_b);

  std::size_t n_a() const { return adj_.rows(); }
  std::size_t n_b() const { return adj_.cols(); }
  bool has_edge(std::size_t a, std::size_t b) const { return adj_.get(a, b); }
  void add_edge(std::size_t a, std::size_t b) { adj_.set(a, b, true); }
  void remove_edge(std::size_t a, std::size_t b) { adj_.set(a, b, false); }
  const BitRow& neighbors(std::size_t a) const { return adj_.row(a); }
  std::size_t edge_count() const { return adj_.count(); }
  const BitMatrix& adjacency() const { return adj_; }

  // Every edge of *this is an edge of `other` (same dimensions required).
  bool is_subgraph_of(const BipartiteGraph& other) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  BitMatrix adj_;
};

// Simple undirected graph; adjacency kept symmetric with an empty diagonal.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n) : adj_(n, n) {}

  std::size_t size() const { return adj_.rows(); }
  bool has_edge(std::size_t u, std::size_t v) const { return adj_.get(u, v); }
  // Self-loops are rejected.
  void add_edge(std::size_t u, std::size_t v);
  const BitRow& neighbors(std::size_t u) const { return adj_.row(u); }
  std::size_t edge_count() const { return adj_.count() / 2; }
  bool is_clique(const std::vector<std::size_t>& vertices) const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  BitMatrix adj_;
};

// (x, c) is an edge iff c(x) = 1.
BipartiteGraph class_to_graph(const ConceptClass& c);
ConceptClass graph_to_class(const BipartiteGraph& g);

}  // namespace vcldim
