#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "switchkit/graph.hpp"

namespace switchkit {

inline constexpr int kMaxCanonicalOrder = 10;

/// Isomorphism-invariant encoding: equal iff the graphs are isomorphic.
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Exhaustive labelling search, n <= 10.
CanonicalForm canonical_form(const Graph& g);
/// The graph relabelled so that its adjacency matches its canonical form.
Graph canonical_graph(const Graph& g);
/// Permutation p with canonical_graph(g) having vertex i = g vertex p[i].
std::vector<int> canonical_labeling(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

/// Representatives of every isomorphism type reachable by switching g,
/// sorted by canonical form (n <= 10).
std::vector<Graph> switching_class(const Graph& g);
std::vector<CanonicalForm> switching_class_forms(const Graph& g);
/// Least canonical form over the switching class; equal iff equivalent.
CanonicalForm switching_class_key(const Graph& g);
bool are_switching_equivalent(const Graph& g, const Graph& h);

/// Every graph of order n up to isomorphism, in canonical form (n <= 10;
/// practical up to 8).
std::vector<Graph> all_graphs(int n);

}  // namespace switchkit

template <>
struct std::hash<switchkit::CanonicalForm> {
  std::size_t operator()(const switchkit::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes);
  }
};
