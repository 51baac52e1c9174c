#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "switchkit/graph.hpp"
#include "switchkit/oracle.hpp"
#include "switchkit/recognize.hpp"

namespace switchkit {

/// Switching sets returned by the upper procedures exclude vertex 0 only in
/// the enumeration variants; decision variants return the first verified
/// candidate as constructed.

std::optional<VertexSet> upper_split(const Graph& g);
/// Every A with vertex 0 excluded and S(G, A) split, sorted.
std::vector<VertexSet> enumerate_upper_split(const Graph& g);

std::optional<VertexSet> upper_pseudo_split(const Graph& g);
std::vector<VertexSet> enumerate_upper_pseudo_split(const Graph& g);

/// For a 5-vertex graph in the switching class of C5: the unique B with
/// |B| >= 3 and S(h, B) a 5-cycle.
std::optional<VertexSet> c5_switch_side(const Graph& h);

/// Which branch of the paw-free procedure produced the witness.
enum class PawFreeStep {
  AlreadyFree,
  TriangleFree,
  CompleteMultipartite,
  NonAdjacentOutside,
  /// (V - N[u1,u2]) + ((N[u1] xor N[u2]) - N(u3))
  NonAdjacentCommonOffU3,
  /// (V - N[u1,u2]) + ((N[u1] xor N[u2]) & N(u3))
  NonAdjacentCommonOnU3,
  AdjacentCoComponents,
};

std::string to_string(PawFreeStep step);

struct PawFreeResult {
  VertexSet a;
  PawFreeStep step;
};

std::optional<VertexSet> upper_paw_free(const Graph& g);
std::optional<PawFreeResult> upper_paw_free_traced(const Graph& g);

/// Exhaustive at desk scale, n <= 22.
std::optional<VertexSet> upper_triangle_free(const Graph& g);
std::optional<VertexSet> upper_complete_multipartite(const Graph& g);
std::optional<VertexSet> upper_bipartite(const Graph& g);

/// G[s] is K_{p+1}-free and G[t] has no independent set of size q+1.
struct PqSplitPartition {
  VertexSet s;
  VertexSet t;

  friend bool operator==(const PqSplitPartition&, const PqSplitPartition&) = default;
};

/// All (p,q)-split partitions, ordered by the vertex-by-vertex search
/// (vertex 0 first, S before T). p, q >= 1, n <= 22.
std::vector<PqSplitPartition> pq_split_partitions(const Graph& g, int p, int q);

/// p, q >= 2, n <= 22.
std::optional<VertexSet> upper_star_costar(const Graph& g, int p, int q);

std::optional<VertexSet> upper_bipartite_chain(const Graph& g);

enum class UpperClassId {
  Split,
  PseudoSplit,
  PawFree,
  StarCostar,
  Bipartite,
  BipartiteChain,
  TriangleFree,
  CompleteMultipartite,
};

std::vector<UpperClassId> all_upper_classes();
/// "split", "pseudo-split", "paw-free", "star-costar", ...
std::string to_string(UpperClassId id);
std::optional<UpperClassId> parse_upper_class(std::string_view name);

/// Membership test of the target class; p, q apply to star-costar only.
GraphPredicate upper_class_predicate(UpperClassId id, int p = 2, int q = 2);
/// Dispatch to the matching upper procedure.
std::optional<VertexSet> solve_upper(const Graph& g, UpperClassId id, int p = 2, int q = 2);
/// Split and pseudo-split only.
bool has_enumeration(UpperClassId id);
/// Throws std::invalid_argument when !has_enumeration(id).
std::vector<VertexSet> enumerate_upper(const Graph& g, UpperClassId id);

}  // namespace switchkit
