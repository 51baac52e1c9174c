#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "switchkit/graph.hpp"
#include "switchkit/induced.hpp"
#include "switchkit/oracle.hpp"
#include "switchkit/patterns.hpp"

namespace switchkit {

/// Lower switching classes: graphs every switch of which lies in the class.
enum class LowerClassId {
  WeaklyChordal,
  Permutation,
  CoComparability,
  Comparability,
  DistanceHereditary,
  Meyniel,
  BipartiteFamily,
  ChordalFamily,
  Block,
  Line,
  Outerplanar,
  Threshold,
};

std::vector<LowerClassId> all_lower_classes();
/// "weakly-chordal", "permutation", ...
std::string to_string(LowerClassId id);
std::optional<LowerClassId> parse_lower_class(std::string_view name);

/// Forbidden graphs whose switching expansion defines the class, for the
/// family-defined ids; empty otherwise.
PatternFamily lower_base_family(LowerClassId id);
/// Cached switching expansion of lower_base_family(id).
const PatternFamily& lower_forbidden_family(LowerClassId id);
bool is_family_defined(LowerClassId id);

bool recognize_lower(const Graph& g, LowerClassId id);

/// Membership test of the underlying class, for oracle_lower. Family-defined
/// ids test freeness of the base family; the rest use a direct recognizer.
GraphPredicate lower_oracle_predicate(LowerClassId id);

/// Concrete profile of g among the eight lower-chordal families, if any.
std::optional<Profile> is_c0_member(const Graph& g);
const std::vector<Profile>& c0_families();

bool is_block_lower(const Graph& g);
const std::vector<Profile>& block_lower_families();

bool is_line_lower(const Graph& g);
const std::vector<Profile>& line_lower_families();

/// Matched profile for the profile-based ids (chordal, block, line).
std::optional<Profile> lower_profile(const Graph& g, LowerClassId id);

/// h is a minor of g. n(g) <= 8.
bool has_minor(const Graph& g, const Graph& h);
bool is_lower_outerplanar(const Graph& g);

}  // namespace switchkit
