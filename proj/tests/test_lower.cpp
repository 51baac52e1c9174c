#include <doctest.h>

#include <functional>

#include "support/oracles.hpp"
#include "switchkit/switchkit.hpp"

using namespace switchkit;

namespace {

std::function<bool(const Graph&)> direct_test(LowerClassId id) {
  switch (id) {
    case LowerClassId::WeaklyChordal:
      return oracles::is_weakly_chordal;
    case LowerClassId::Permutation:
      return oracles::is_permutation;
    case LowerClassId::CoComparability:
      return oracles::is_cocomparability;
    case LowerClassId::Comparability:
      return oracles::is_comparability;
    case LowerClassId::DistanceHereditary:
      return oracles::is_distance_hereditary;
    case LowerClassId::Meyniel:
      return oracles::is_meyniel;
    case LowerClassId::BipartiteFamily:
      return oracles::is_bipartite;
    case LowerClassId::ChordalFamily:
      return oracles::is_chordal;
    case LowerClassId::Block:
      return oracles::is_block_graph;
    case LowerClassId::Line:
      return oracles::is_line_graph;
    default:
      return {};
  }
}

bool is_threshold(const Graph& g) {
  return is_family_free(g, {pattern("2k2"), cycle_graph(4), path_graph(4)});
}

}  // namespace

TEST_SUITE("lower") {

TEST_CASE("class names round trip") {
  for (auto id : all_lower_classes()) CHECK(parse_lower_class(to_string(id)) == id);
  CHECK(!parse_lower_class("planar").has_value());
  CHECK(all_lower_classes().size() == 12);
}

TEST_CASE("recognizer examples") {
  CHECK(!recognize_lower(cycle_graph(5), LowerClassId::WeaklyChordal));
  CHECK(recognize_lower(complete_bipartite_graph(3, 4), LowerClassId::BipartiteFamily));
  CHECK(recognize_lower(path_graph(4), LowerClassId::Comparability));
  CHECK(is_c0_member(path_graph(4))->to_string() == "(1,1,1,1)");
  CHECK(is_c0_member(complete_graph(5))->to_string() == "(5)");
  CHECK(!is_c0_member(cycle_graph(4)).has_value());
  CHECK(is_block_lower(pattern("k2+k3")));
  CHECK(is_block_lower(path_graph(3)));
  CHECK(!is_block_lower(profile_graph(Profile::parse("(1,0,1,0,2)"))));
  CHECK(is_line_lower(cycle_graph(5)));
  CHECK(is_line_lower(profile_graph(Profile::parse("(1,2,1,1)"))));
  CHECK(!is_line_lower(pattern("claw")));
  CHECK(recognize_lower(complete_graph(3), LowerClassId::Threshold));
  CHECK(!recognize_lower(complete_graph(4), LowerClassId::Threshold));
}

TEST_CASE("tiny graphs are accepted everywhere") {
  for (auto id : all_lower_classes()) {
    CHECK(recognize_lower(Graph(0), id));
    CHECK(recognize_lower(Graph(1), id));
  }
}

TEST_CASE("family-defined classes match the oracle with direct tests") {
  for (auto id : all_lower_classes()) {
    if (!is_family_defined(id)) continue;
    const auto pred = direct_test(id);
    for (int n = 0; n <= 6; ++n) {
      for (const auto& g : all_graphs(n)) {
        CAPTURE(to_string(id));
        CAPTURE(to_graph6(g));
        CHECK(recognize_lower(g, id) == oracle_lower(g, pred));
      }
    }
  }
}

TEST_CASE("rule-based classes match the oracle with direct tests") {
  const LowerClassId ids[] = {LowerClassId::BipartiteFamily, LowerClassId::ChordalFamily, LowerClassId::Block,
                              LowerClassId::Line};
  for (auto id : ids) {
    const auto pred = direct_test(id);
    for (int n = 0; n <= 6; ++n) {
      for (const auto& g : all_graphs(n)) {
        CAPTURE(to_string(id));
        CAPTURE(to_graph6(g));
        CHECK(recognize_lower(g, id) == oracle_lower(g, pred));
      }
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (const auto& g : all_graphs(n)) CHECK(recognize_lower(g, LowerClassId::Threshold) == oracle_lower(g, is_threshold));
  }
}

TEST_CASE("complete bipartite test agrees with the naive check") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& g : all_graphs(n)) CHECK(is_complete_bipartite(g) == oracles::is_complete_bipartite(g));
  }
}

TEST_CASE("meyniel direct tests agree") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& g : all_graphs(n)) CHECK(oracles::is_meyniel(g) == oracles::is_meyniel_by_cycles(g));
  }
}

TEST_CASE("intersection and complement laws") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& g : all_graphs(n)) {
      const bool perm = recognize_lower(g, LowerClassId::Permutation);
      CHECK(perm == (recognize_lower(g, LowerClassId::Comparability) && recognize_lower(g, LowerClassId::CoComparability)));
      CHECK(recognize_lower(g, LowerClassId::Comparability) ==
            recognize_lower(complement(g), LowerClassId::CoComparability));
    }
  }
}

TEST_CASE("lower-chordal members are proper interval graphs") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& g : all_graphs(n)) {
      if (is_c0_member(g)) CHECK(oracles::is_proper_interval(g));
    }
  }
}

TEST_CASE("lower-chordal census against the hole-free oracle") {
  const PatternFamily holes{cycle_graph(4), cycle_graph(5), cycle_graph(6)};
  for (int n = 0; n <= 7; ++n) {
    for (const auto& g : all_graphs(n)) {
      CAPTURE(to_graph6(g));
      CHECK(is_c0_member(g).has_value() == oracle_lower(g, [&](const Graph& s) { return is_family_free(s, holes); }));
    }
  }
}

TEST_CASE("library chordal and line recognizers agree with the reference tests") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& g : all_graphs(n)) {
      CAPTURE(to_graph6(g));
      CHECK(is_chordal(g) == oracles::is_chordal(g));
      CHECK(is_line_graph(g) == oracles::is_line_graph(g));
    }
  }
  CHECK(!is_line_graph(pattern("claw")));
  CHECK(is_line_graph(complete_graph(6)));
  CHECK(!is_chordal(cycle_graph(9)));
}

TEST_CASE("oracle predicates reproduce the recognizers") {
  for (auto id : all_lower_classes()) {
    const auto pred = lower_oracle_predicate(id);
    for (int n = 0; n <= 6; ++n) {
      for (const auto& g : all_graphs(n)) {
        CAPTURE(to_string(id));
        CAPTURE(to_graph6(g));
        CHECK(recognize_lower(g, id) == oracle_lower(g, pred));
      }
    }
  }
}

TEST_CASE("minor tests") {
  CHECK(has_minor(complete_graph(4), complete_graph(4)));
  CHECK(has_minor(cycle_graph(5), complete_graph(3)));
  CHECK(!has_minor(path_graph(6), complete_graph(3)));
  CHECK(!has_minor(complete_bipartite_graph(2, 3), complete_graph(4)));
  CHECK(has_minor(wheel_graph(5), complete_graph(4)));
  CHECK(has_minor(cycle_graph(6), cycle_graph(4)));
  CHECK(!has_minor(cycle_graph(4), cycle_graph(5)));
  CHECK_THROWS_AS((void)has_minor(Graph(9), complete_graph(3)), TooLarge);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : all_graphs(n)) {
      const bool forest = g.edge_count() + components(g).size() == static_cast<std::size_t>(n);
      CHECK(has_minor(g, complete_graph(3)) == !forest);
      CHECK(has_minor(g, path_graph(2)) == (g.edge_count() > 0));
    }
  }
}

TEST_CASE("lower outerplanar examples and census") {
  CHECK(is_lower_outerplanar(cycle_graph(5)));
  CHECK(!is_lower_outerplanar(pattern("net")));
  CHECK(!is_lower_outerplanar(path_graph(6)));
  std::vector<int> counts;
  for (int n = 4; n <= 6; ++n) {
    int c = 0;
    for (const auto& g : all_graphs(n)) c += is_lower_outerplanar(g) ? 1 : 0;
    counts.push_back(c);
  }
  CHECK(counts == std::vector<int>{8, 4, 0});
  for (const auto& g : all_graphs(5)) {
    if (is_lower_outerplanar(g)) CHECK(are_switching_equivalent(g, cycle_graph(5)));
  }
}

}  // TEST_SUITE
