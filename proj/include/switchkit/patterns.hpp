#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "switchkit/graph.hpp"

namespace switchkit {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph complete_bipartite_graph(int a, int b);
/// C_n plus a vertex adjacent to all of it.
Graph wheel_graph(int n);

/// Named small graph. Grammar: optional "co-" prefix, then terms joined by
/// '+', each an optional multiplicity followed by a base name: kN, pN, cN,
/// wN, kA_B, paw, diamond, house, net, sun, domino, claw, bull, gem, fork.
/// Examples: "p4", "c7", "k1_3", "2k2", "k3+k1", "co-c6".
Graph pattern(std::string_view name);
/// Names listed by the command-line tool.
std::vector<std::string> pattern_names();

/// Sequence of clique sizes along a path; 0 separates components.
///
/// As a family, entries equal to kPlus stand for any positive size.
struct Profile {
  static constexpr int kPlus = -1;
  std::vector<int> entries;

  bool is_concrete() const;
  /// "(2,0,1)" or "(+,+,1)"
  std::string to_string() const;
  static Profile parse(std::string_view text);

  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Graph of a concrete profile: group i is a clique, groups at consecutive
/// positions are complete to each other, all other pairs are non-adjacent.
Graph profile_graph(const Profile& p);

/// Concrete member of the family isomorphic to g, in the family's
/// orientation, or nullopt. The null graph matches with an empty profile.
std::optional<Profile> matches_profile_family(const Graph& g, const Profile& family);

}  // namespace switchkit
