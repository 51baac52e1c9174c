#include "switchkit/lower.hpp"

#include <array>
#include <map>

#include "switchkit/canonical.hpp"
#include "switchkit/oracle.hpp"
#include "switchkit/recognize.hpp"

namespace switchkit {

namespace {

constexpr std::array<std::pair<LowerClassId, const char*>, 12> kNames{{
    {LowerClassId::WeaklyChordal, "weakly-chordal"},
    {LowerClassId::Permutation, "permutation"},
    {LowerClassId::CoComparability, "co-comparability"},
    {LowerClassId::Comparability, "comparability"},
    {LowerClassId::DistanceHereditary, "distance-hereditary"},
    {LowerClassId::Meyniel, "meyniel"},
    {LowerClassId::BipartiteFamily, "bipartite"},
    {LowerClassId::ChordalFamily, "chordal"},
    {LowerClassId::Block, "block"},
    {LowerClassId::Line, "line"},
    {LowerClassId::Outerplanar, "outerplanar"},
    {LowerClassId::Threshold, "threshold"},
}};

std::vector<Profile> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Profile> out;
  for (const char* t : texts) out.push_back(Profile::parse(t));
  return out;
}

std::optional<Profile> first_match(const Graph& g, const std::vector<Profile>& families) {
  for (const auto& f : families) {
    if (auto p = matches_profile_family(g, f)) return p;
  }
  return std::nullopt;
}

bool in_c5_class(const Graph& g) {
  static const CanonicalForm key = switching_class_key(cycle_graph(5));
  return g.order() == 5 && switching_class_key(g) == key;
}

}  // namespace

std::vector<LowerClassId> all_lower_classes() {
  std::vector<LowerClassId> out;
  for (auto [id, name] : kNames) out.push_back(id);
  return out;
}

std::string to_string(LowerClassId id) {
  for (auto [i, name] : kNames) {
    if (i == id) return name;
  }
  return "unknown";
}

std::optional<LowerClassId> parse_lower_class(std::string_view name) {
  for (auto [id, n] : kNames) {
    if (name == n) return id;
  }
  return std::nullopt;
}

PatternFamily lower_base_family(LowerClassId id) {
  switch (id) {
    case LowerClassId::WeaklyChordal:
    case LowerClassId::Permutation:
      return {cycle_graph(5), cycle_graph(6), pattern("co-c6")};
    case LowerClassId::DistanceHereditary:
      return {pattern("domino"), pattern("house"), cycle_graph(5), cycle_graph(6)};
    case LowerClassId::Comparability:
      return {cycle_graph(5), pattern("co-c6")};
    case LowerClassId::CoComparability:
      return {cycle_graph(5), cycle_graph(6)};
    case LowerClassId::Meyniel:
      return {cycle_graph(5), pattern("house")};
    default:
      return {};
  }
}

bool is_family_defined(LowerClassId id) { return !lower_base_family(id).empty(); }

const PatternFamily& lower_forbidden_family(LowerClassId id) {
  static const std::map<LowerClassId, PatternFamily> cache = [] {
    std::map<LowerClassId, PatternFamily> m;
    for (auto [i, name] : kNames) m.emplace(i, expand_switch_family(lower_base_family(i)));
    return m;
  }();
  return cache.at(id);
}

const std::vector<Profile>& c0_families() {
  static const auto f = parse_all({"(+)", "(+,+,1)", "(+,1,+)", "(+,0,+)", "(+,+,1,0,+)", "(+,0,+,0,1)", "(+,+,1,+)",
                                   "(+,+,1,+,+)"});
  return f;
}

const std::vector<Profile>& block_lower_families() {
  static const auto f = parse_all({"(+)", "(+,0,+)", "(1,1,1)", "(1,0,1,0,1)"});
  return f;
}

const std::vector<Profile>& line_lower_families() {
  static const auto f =
      parse_all({"(+)", "(1,1,1)", "(2,1,1)", "(1,2,1)", "(2,1,2)", "(+,0,+)", "(1,1,1,0,1)", "(2,1,1,0,1)",
                 "(1,0,1,0,1)", "(2,0,1,0,1)", "(2,0,2,0,1)", "(1,1,1,1)", "(1,2,1,1)", "(1,1,1,1,1)", "(2,2,1)"});
  return f;
}

std::optional<Profile> is_c0_member(const Graph& g) { return first_match(g, c0_families()); }

bool is_block_lower(const Graph& g) { return first_match(g, block_lower_families()).has_value(); }

bool is_line_lower(const Graph& g) { return first_match(g, line_lower_families()).has_value() || in_c5_class(g); }

std::optional<Profile> lower_profile(const Graph& g, LowerClassId id) {
  switch (id) {
    case LowerClassId::ChordalFamily:
      return is_c0_member(g);
    case LowerClassId::Block:
      return first_match(g, block_lower_families());
    case LowerClassId::Line:
      return first_match(g, line_lower_families());
    default:
      return std::nullopt;
  }
}

bool is_lower_outerplanar(const Graph& g) {
  if (g.order() > 5) return false;
  static const Graph k4 = complete_graph(4);
  static const Graph k23 = complete_bipartite_graph(2, 3);
  return oracle_lower(g, [](const Graph& s) { return !has_minor(s, k4) && !has_minor(s, k23); });
}

bool recognize_lower(const Graph& g, LowerClassId id) {
  if (g.order() <= 1) return true;
  switch (id) {
    case LowerClassId::BipartiteFamily:
      return is_complete_bipartite(g);
    case LowerClassId::ChordalFamily:
      return is_c0_member(g).has_value();
    case LowerClassId::Block:
      return is_block_lower(g);
    case LowerClassId::Line:
      return is_line_lower(g);
    case LowerClassId::Outerplanar:
      return is_lower_outerplanar(g);
    case LowerClassId::Threshold:
      return g.order() <= 3;
    default:
      return is_family_free(g, lower_forbidden_family(id));
  }
}

GraphPredicate lower_oracle_predicate(LowerClassId id) {
  switch (id) {
    case LowerClassId::BipartiteFamily:
      return [](const Graph& s) { return is_bipartite(s); };
    case LowerClassId::ChordalFamily:
      return [](const Graph& s) { return is_chordal(s); };
    case LowerClassId::Block:
      return [](const Graph& s) { return is_chordal(s) && !contains_induced(s, pattern("diamond")); };
    case LowerClassId::Line:
      return [](const Graph& s) { return is_line_graph(s); };
    case LowerClassId::Outerplanar:
      return [](const Graph& s) { return !has_minor(s, complete_graph(4)) && !has_minor(s, complete_bipartite_graph(2, 3)); };
    case LowerClassId::Threshold:
      return [](const Graph& s) { return is_family_free(s, {pattern("2k2"), cycle_graph(4), path_graph(4)}); };
    default: {
      const PatternFamily base = lower_base_family(id);
      return [base](const Graph& s) { return is_family_free(s, base); };
    }
  }
}

}  // namespace switchkit
