#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "switchkit/graph.hpp"

namespace switchkit {

/// Clique K and independent set I partitioning the vertices.
struct SplitPartition {
  VertexSet clique;
  VertexSet independent;

  friend bool operator==(const SplitPartition&, const SplitPartition&) = default;
};

/// Degree-sequence test.
bool is_split(const Graph& g);
/// Every split partition, sorted by clique side. Either side may be empty.
std::vector<SplitPartition> split_partitions(const Graph& g);

struct PseudoSplitPartition {
  VertexSet clique;
  /// Induced C5 complete to the clique and anticomplete to the independent
  /// side; empty when the graph is split.
  VertexSet cycle;
  VertexSet independent;
};

bool is_pseudo_split(const Graph& g);
/// Split partition (with empty cycle) or the unique partition around an
/// induced C5.
std::optional<PseudoSplitPartition> pseudo_split_partition(const Graph& g);

bool is_triangle_free(const Graph& g);
bool is_paw_free(const Graph& g);
/// Complement is a disjoint union of cliques.
bool is_complete_multipartite(const Graph& g);
bool is_bipartite(const Graph& g);
/// K_{a,b} with a, b >= 0; edgeless graphs qualify.
bool is_complete_bipartite(const Graph& g);
/// The two sides of a complete bipartite graph; the second may be empty.
std::optional<std::pair<VertexSet, VertexSet>> complete_bipartite_sides(const Graph& g);
/// {C3, 2K2, C5}-free.
bool is_bipartite_chain(const Graph& g);
/// {K_{1,p}, co-K_{1,q}}-free.
bool is_star_costar_free(const Graph& g, int p, int q);

/// Every cycle of length >= 4 has a chord (perfect elimination ordering).
bool is_chordal(const Graph& g);
/// Edges partition into cliques with every vertex in at most two of them.
bool is_line_graph(const Graph& g);

/// g[within] contains a clique of size k.
bool has_clique(const Graph& g, const VertexSet& within, int k);
/// g[within] contains an independent set of size k.
bool has_independent_set(const Graph& g, const VertexSet& within, int k);

}  // namespace switchkit
