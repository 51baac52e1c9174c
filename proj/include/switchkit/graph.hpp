#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "switchkit/vertex_set.hpp"

namespace switchkit {

inline constexpr int kMaxOrder = 4096;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Graphs are values: every operation returns a fresh graph.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of order n.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int words_per_row() const { return wpr_; }

  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * wpr_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  std::span<const std::uint64_t> row(int v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * wpr_, static_cast<std::size_t>(wpr_)};
  }
  /// Single-word row; valid when order() <= 64.
  std::uint64_t row_word(int v) const { return rows_[v]; }

  VertexSet neighbors(int v) const;
  VertexSet closed_neighbors(int v) const;
  VertexSet vertices() const { return VertexSet::full(n_); }
  int degree(int v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

  /// Mutable construction used by builders.
  class Builder;

 private:
  int n_ = 0;
  int wpr_ = 0;
  std::vector<std::uint64_t> rows_;

  friend class Builder;
  friend Graph seidel_switch(const Graph&, const VertexSet&);
  friend Graph complement(const Graph&);
  friend Graph induced(const Graph&, const VertexSet&);
};

class Graph::Builder {
 public:
  explicit Builder(int n);
  explicit Builder(const Graph& g);

  int order() const { return g_.n_; }
  Builder& add_edge(int u, int v);
  Builder& remove_edge(int u, int v);
  Builder& toggle_edge(int u, int v);
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
  /// Every pair between a and b becomes an edge (pairs u == v skipped).
  Builder& join(const VertexSet& a, const VertexSet& b);
  Graph build() const { return g_; }

 private:
  void check(int u, int v) const;
  void set_bit(int u, int v, bool on);
  Graph g_;
};

/// Seidel switching: toggle every pair with exactly one end in a.
Graph seidel_switch(const Graph& g, const VertexSet& a);
Graph complement(const Graph& g);
/// Induced subgraph on u, vertices renumbered in increasing order.
Graph induced(const Graph& g, const VertexSet& u);
/// Every vertex outside m sees all of m or none of it.
bool is_module(const Graph& g, const VertexSet& m);
/// Disjoint union, vertices of h follow those of g.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Connected components, each as a vertex set, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g);
/// Components of the complement.
std::vector<VertexSet> co_components(const Graph& g);

}  // namespace switchkit
