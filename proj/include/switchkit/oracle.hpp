#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "switchkit/graph.hpp"

namespace switchkit {

inline constexpr int kMaxOracleOrder = 22;

using GraphPredicate = std::function<bool(const Graph&)>;

struct OracleOptions {
  /// Worker threads; results do not depend on this value.
  int threads = 1;
};

/// First switching set A (vertex 0 excluded, by size then binary value) with
/// pred(S(G, A)), or nullopt. n <= 22.
std::optional<VertexSet> oracle_upper(const Graph& g, const GraphPredicate& pred, OracleOptions opts = {});
/// pred holds on every switch of g. n <= 22.
bool oracle_lower(const Graph& g, const GraphPredicate& pred, OracleOptions opts = {});
/// Every A with vertex 0 excluded and pred(S(G, A)), in oracle order.
std::vector<VertexSet> oracle_upper_all(const Graph& g, const GraphPredicate& pred);

/// A if 0 is not in A, otherwise its complement; both give the same switch.
VertexSet normalize_switching_set(const VertexSet& a);

}  // namespace switchkit
