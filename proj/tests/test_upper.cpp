#include <doctest.h>

#include <map>
#include <random>

#include "support/oracles.hpp"
#include "switchkit/switchkit.hpp"

using namespace switchkit;

namespace {

bool star_costar_free_naive(const Graph& g, int p, int q) {
  return !oracles::brute_contains(g, complete_bipartite_graph(1, p)) &&
         !oracles::brute_contains(g, complement(complete_bipartite_graph(1, q)));
}

bool bipartite_chain_naive(const Graph& g) {
  return oracles::is_bipartite(g) && !oracles::brute_contains(g, pattern("2k2"));
}

/// Number of (h, k, i) pseudo-split partitions with a non-empty cycle part.
int count_cycle_partitions(const Graph& g) {
  const int n = g.order();
  int count = 0;
  oracles::for_each_subset(n, [&](std::uint64_t m) {
    if (std::popcount(m) != 5) return;
    const VertexSet h = VertexSet::from_mask(n, m);
    if (!oracles::is_cycle_graph(induced(g, h))) return;
    VertexSet k(n);
    VertexSet i(n);
    bool ok = true;
    h.complement().for_each([&](int x) {
      const int seen = (g.neighbors(x) & h).count();
      if (seen == 5) {
        k.insert(x);
      } else if (seen == 0) {
        i.insert(x);
      } else {
        ok = false;
      }
    });
    if (!ok) return;
    for (int a = k.first(); a >= 0 && ok; a = k.next(a)) {
      for (int b = k.next(a); b >= 0 && ok; b = k.next(b)) ok = g.adjacent(a, b);
    }
    for (int a = i.first(); a >= 0 && ok; a = i.next(a)) {
      for (int b = i.next(a); b >= 0 && ok; b = i.next(b)) ok = !g.adjacent(a, b);
    }
    if (ok) ++count;
  });
  return count;
}

template <class F>
void for_all_graphs(int max_n, F&& f) {
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& g : all_graphs(n)) f(g);
  }
}

}  // namespace

TEST_SUITE("upper") {

TEST_CASE("split recognition and partitions") {
  for_all_graphs(7, [](const Graph& g) {
    CHECK(is_split(g) == oracles::brute_is_split(g));
    std::vector<VertexSet> cliques;
    for (const auto& p : split_partitions(g)) {
      CHECK((p.clique | p.independent) == VertexSet::full(g.order()));
      CHECK(!p.clique.intersects(p.independent));
      cliques.push_back(p.clique);
    }
    CHECK(cliques == oracles::brute_split_cliques(g));
  });
  CHECK(split_partitions(Graph(1)).size() == 2);
  CHECK(split_partitions(cycle_graph(4)).empty());
  const auto paw = split_partitions(pattern("paw"));
  CHECK(std::any_of(paw.begin(), paw.end(), [](const SplitPartition& p) { return p.clique.count() == 3; }));
}

TEST_CASE("split examples") {
  CHECK(upper_split(pattern("paw"))->empty());
  const auto c4 = upper_split(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(is_split(seidel_switch(cycle_graph(4), *c4)));
  const auto c5 = upper_split(cycle_graph(5));
  REQUIRE(c5.has_value());
  CHECK(is_split(seidel_switch(cycle_graph(5), *c5)));
  CHECK(enumerate_upper_split(Graph(1)) == std::vector<VertexSet>{VertexSet(1)});
  CHECK(enumerate_upper_split(cycle_graph(4)) == oracle_upper_all(cycle_graph(4), is_split));
  CHECK(enumerate_upper_split(complete_graph(3)) == oracle_upper_all(complete_graph(3), is_split));
}

TEST_CASE("split decision and enumeration match the oracle") {
  for_all_graphs(6, [](const Graph& g) {
    CAPTURE(to_graph6(g));
    const auto a = upper_split(g);
    CHECK(a.has_value() == oracle_upper(g, is_split).has_value());
    if (a) CHECK(is_split(seidel_switch(g, *a)));
    CHECK(enumerate_upper_split(g) == oracle_upper_all(g, is_split));
  });
}

TEST_CASE("split solutions of split graphs meet the structural bound") {
  for_all_graphs(7, [](const Graph& g) {
    if (!is_split(g)) return;
    const SplitPartition base = split_partitions(g).front();
    const int k = base.clique.count();
    const int i = base.independent.count();
    for (const auto& a : enumerate_upper_split(g)) {
      auto near_edge = [](int got, int size) { return got <= 1 || got >= size - 1; };
      const bool direct = near_edge((a & base.clique).count(), k) && near_edge((a & base.independent).count(), i);
      const VertexSet b = a.complement();
      const bool flipped = near_edge((b & base.clique).count(), k) && near_edge((b & base.independent).count(), i);
      CHECK((direct || flipped));
    }
  });
}

TEST_CASE("pseudo-split recognition") {
  for_all_graphs(7, [](const Graph& g) {
    CAPTURE(to_graph6(g));
    CHECK(is_pseudo_split(g) == oracles::is_2k2_c4_free(g));
    const auto p = pseudo_split_partition(g);
    CHECK(p.has_value() == is_pseudo_split(g));
    if (!p) return;
    CHECK((p->clique | p->cycle | p->independent) == VertexSet::full(g.order()));
    for (int a = p->clique.first(); a >= 0; a = p->clique.next(a)) {
      for (int b = p->clique.next(a); b >= 0; b = p->clique.next(b)) CHECK(g.adjacent(a, b));
      CHECK(p->cycle.is_subset_of(g.neighbors(a)));
    }
    for (int a = p->independent.first(); a >= 0; a = p->independent.next(a)) {
      for (int b = p->independent.next(a); b >= 0; b = p->independent.next(b)) CHECK(!g.adjacent(a, b));
      CHECK(!p->cycle.intersects(g.neighbors(a)));
    }
    if (!p->cycle.empty()) {
      CHECK(oracles::is_cycle_graph(induced(g, p->cycle)));
      CHECK(count_cycle_partitions(g) == 1);
    }
  });
}

TEST_CASE("switch sides within the class of C5") {
  CHECK(c5_switch_side(cycle_graph(5))->count() == 5);
  const Graph bull = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
  CHECK(c5_switch_side(bull) == VertexSet::of(5, {0, 1, 3, 4}));
  const Graph gem = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  CHECK(c5_switch_side(gem) == VertexSet::of(5, {0, 3, 4}));
  const Graph p4k1 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(c5_switch_side(p4k1) == VertexSet::of(5, {1, 2, 4}));
  CHECK(!c5_switch_side(path_graph(5)).has_value());
  CHECK(!c5_switch_side(cycle_graph(4)).has_value());
}

TEST_CASE("pseudo-split examples") {
  CHECK(upper_pseudo_split(cycle_graph(5))->empty());
  const auto gem = upper_pseudo_split(pattern("gem"));
  REQUIRE(gem.has_value());
  CHECK(is_pseudo_split(seidel_switch(pattern("gem"), *gem)));
  CHECK(upper_pseudo_split(path_graph(6)).has_value() ==
        oracle_upper(path_graph(6), oracles::is_2k2_c4_free).has_value());
}

TEST_CASE("pseudo-split decision and enumeration match the oracle") {
  for_all_graphs(6, [](const Graph& g) {
    CAPTURE(to_graph6(g));
    const auto a = upper_pseudo_split(g);
    CHECK(a.has_value() == oracle_upper(g, oracles::is_2k2_c4_free).has_value());
    if (a) CHECK(is_pseudo_split(seidel_switch(g, *a)));
    CHECK(enumerate_upper_pseudo_split(g) == oracle_upper_all(g, oracles::is_2k2_c4_free));
  });
}

TEST_CASE("basic predicates agree with naive checks") {
  for_all_graphs(6, [](const Graph& g) {
    CHECK(is_paw_free(g) == !oracles::brute_contains(g, pattern("paw")));
    CHECK(is_triangle_free(g) == !oracles::brute_contains(g, complete_graph(3)));
    CHECK(is_complete_multipartite(g) == !oracles::brute_contains(g, pattern("k2+k1")));
    CHECK(is_bipartite(g) == oracles::is_bipartite(g));
    CHECK(is_bipartite_chain(g) == bipartite_chain_naive(g));
    for (int p = 1; p <= 3; ++p) {
      for (int q = 1; q <= 3; ++q) CHECK(is_star_costar_free(g, p, q) == star_costar_free_naive(g, p, q));
    }
  });
}

TEST_CASE("paw-free examples") {
  const auto paw = upper_paw_free(pattern("paw"));
  REQUIRE(paw.has_value());
  CHECK(is_paw_free(seidel_switch(pattern("paw"), *paw)));
  const auto k4 = upper_paw_free(complete_graph(4));
  REQUIRE(k4.has_value());
  CHECK(is_paw_free(seidel_switch(complete_graph(4), *k4)));
  CHECK(upper_paw_free(cycle_graph(5))->empty());
  CHECK_THROWS_AS((void)upper_paw_free(Graph(23)), TooLarge);
}

TEST_CASE("paw-free decision matches the oracle") {
  std::map<PawFreeStep, int> steps;
  for_all_graphs(6, [&](const Graph& g) {
    CAPTURE(to_graph6(g));
    const auto r = upper_paw_free_traced(g);
    CHECK(r.has_value() == oracle_upper(g, is_paw_free).has_value());
    if (r) {
      CHECK(is_paw_free(seidel_switch(g, r->a)));
      ++steps[r->step];
    }
  });
  CHECK(steps[PawFreeStep::AlreadyFree] > 0);
}

TEST_CASE("desk-scale upper procedures") {
  const auto t = upper_triangle_free(complete_graph(3));
  REQUIRE(t.has_value());
  CHECK(t->count() == 1);
  const auto b = upper_bipartite(cycle_graph(5));
  REQUIRE(b.has_value());
  CHECK(are_isomorphic(seidel_switch(cycle_graph(5), *b), pattern("p4+k1")));
  const auto m = upper_complete_multipartite(pattern("k2+k1"));
  REQUIRE(m.has_value());
  CHECK(is_complete_multipartite(seidel_switch(pattern("k2+k1"), *m)));
}

TEST_CASE("upper bipartite matches the oracle and the two-part restatement") {
  for_all_graphs(7, [](const Graph& g) {
    CAPTURE(to_graph6(g));
    const int n = g.order();
    bool split_exists = n == 0;
    oracles::for_each_subset(n, [&](std::uint64_t m) {
      if (split_exists) return;
      const VertexSet x = VertexSet::from_mask(n, m);
      split_exists = oracles::is_complete_bipartite(induced(g, x)) && oracles::is_complete_bipartite(induced(g, x.complement()));
    });
    const auto a = upper_bipartite(g);
    CHECK(a.has_value() == split_exists);
    CHECK(a.has_value() == oracle_upper(g, oracles::is_bipartite).has_value());
    if (a) CHECK(oracles::is_bipartite(seidel_switch(g, *a)));
  });
}

TEST_CASE("pq-split partitions match the exhaustive check") {
  for_all_graphs(6, [](const Graph& g) {
    for (int p = 1; p <= 3; ++p) {
      for (int q = 1; q <= 3; ++q) {
        std::vector<std::uint64_t> got;
        for (const auto& part : pq_split_partitions(g, p, q)) {
          CHECK((part.s | part.t) == VertexSet::full(g.order()));
          CHECK(!part.s.intersects(part.t));
          got.push_back(g.order() == 0 ? 0 : part.s.words()[0]);
        }
        std::sort(got.begin(), got.end());
        CHECK(got == oracles::brute_pq_split(g, p, q));
      }
    }
  });
  CHECK(pq_split_partitions(cycle_graph(5), 1, 1).empty());
  CHECK(pq_split_partitions(complete_graph(5), 2, 1).size() == oracles::brute_pq_split(complete_graph(5), 2, 1).size());
  CHECK_THROWS_AS(pq_split_partitions(cycle_graph(5), 0, 1), MalformedInput);
}

TEST_CASE("star/co-star examples") {
  const auto a = upper_star_costar(path_graph(3), 2, 2);
  REQUIRE(a.has_value());
  CHECK(is_star_costar_free(seidel_switch(path_graph(3), *a), 2, 2));
  CHECK(upper_star_costar(cycle_graph(5), 3, 3)->empty());
  CHECK_THROWS_AS((void)upper_star_costar(cycle_graph(5), 1, 2), MalformedInput);
  const Graph g = pattern("claw+k1");
  CHECK(upper_star_costar(g, 3, 2).has_value() ==
        oracle_upper(g, [](const Graph& h) { return is_star_costar_free(h, 3, 2); }).has_value());
}

TEST_CASE("star/co-star decision matches the oracle") {
  for (int p = 2; p <= 3; ++p) {
    for (int q = 2; q <= 3; ++q) {
      for_all_graphs(6, [&](const Graph& g) {
        CAPTURE(to_graph6(g));
        CAPTURE(p);
        CAPTURE(q);
        const auto a = upper_star_costar(g, p, q);
        CHECK(a.has_value() == oracle_upper(g, [&](const Graph& h) { return is_star_costar_free(h, p, q); }).has_value());
        if (a) CHECK(is_star_costar_free(seidel_switch(g, *a), p, q));
      });
    }
  }
}

TEST_CASE("bipartite chain") {
  CHECK(is_bipartite_chain(complete_bipartite_graph(2, 3)));
  const auto c5 = upper_bipartite_chain(cycle_graph(5));
  REQUIRE(c5.has_value());
  CHECK(is_bipartite_chain(seidel_switch(cycle_graph(5), *c5)));
  CHECK(!upper_bipartite_chain(complete_graph(4)).has_value());
  for_all_graphs(7, [](const Graph& g) {
    CAPTURE(to_graph6(g));
    CHECK(upper_bipartite_chain(g).has_value() == oracle_upper(g, bipartite_chain_naive).has_value());
  });
}

TEST_CASE("random graphs of order ten") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 12; ++t) {
    const Graph g = oracles::random_graph(10, 0.2 + 0.3 * (t % 3), rng);
    CAPTURE(to_graph6(g));
    CHECK(upper_split(g).has_value() == oracle_upper(g, is_split).has_value());
    CHECK(upper_pseudo_split(g).has_value() == oracle_upper(g, is_pseudo_split).has_value());
    CHECK(upper_paw_free(g).has_value() == oracle_upper(g, is_paw_free).has_value());
    CHECK(enumerate_upper_split(g) == oracle_upper_all(g, is_split));
  }
}

TEST_CASE("class registry dispatches to the procedures") {
  CHECK(all_upper_classes().size() == 8);
  for (auto id : all_upper_classes()) CHECK(parse_upper_class(to_string(id)) == id);
  CHECK(!parse_upper_class("planar").has_value());
  CHECK(has_enumeration(UpperClassId::Split));
  CHECK(!has_enumeration(UpperClassId::PawFree));
  CHECK_THROWS_AS((void)enumerate_upper(cycle_graph(4), UpperClassId::Bipartite), std::invalid_argument);
  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : all_graphs(n)) {
      for (auto id : all_upper_classes()) {
        const auto pred = upper_class_predicate(id);
        const auto a = solve_upper(g, id);
        CHECK(a.has_value() == oracle_upper(g, pred).has_value());
        if (a) CHECK(pred(seidel_switch(g, *a)));
      }
      CHECK(enumerate_upper(g, UpperClassId::Split) == enumerate_upper_split(g));
    }
  }
}

}  // TEST_SUITE
