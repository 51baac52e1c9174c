#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "switchkit/graph.hpp"

namespace switchkit {

/// Embedding of h into g as an induced subgraph: result[i] is the vertex of g
/// playing vertex i of h.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h);

/// A set of pairwise non-isomorphic graphs.
using PatternFamily = std::vector<Graph>;

bool is_family_free(const Graph& g, const PatternFamily& family);
/// Index of the first member found in g, if any.
std::optional<std::size_t> first_family_member(const Graph& g, const PatternFamily& family);

/// Union of the switching classes of the members, up to isomorphism, sorted
/// by canonical form. Members have order <= 10.
PatternFamily expand_switch_family(const PatternFamily& family);

struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000'000ULL;
};

/// Vertices v0..v(k-1) of an induced path, in path order. Throws
/// BudgetExceeded when the search expands more than budget.max_nodes nodes.
std::optional<std::vector<int>> find_induced_path(const Graph& g, int k, SearchBudget budget = {});
/// Vertices of an induced cycle of length k >= 3, in cycle order, starting at
/// its least vertex.
std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int k, SearchBudget budget = {});

}  // namespace switchkit
