#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "support/oracles.hpp"
#include "switchkit/switchkit.hpp"

using namespace switchkit;

TEST_SUITE("graph_core") {

TEST_CASE("vertex set basics") {
  VertexSet s = VertexSet::of(70, {0, 5, 64, 69});
  CHECK(s.count() == 4);
  CHECK(s.first() == 0);
  CHECK(s.next(5) == 64);
  CHECK(s.next(69) == -1);
  CHECK(s.to_string() == "0,5,64,69");
  CHECK(s.complement().count() == 66);
  CHECK(!s.complement().contains(69));
  CHECK(VertexSet(3).to_string().empty());
  CHECK_THROWS_AS((void)(VertexSet(3) | VertexSet(4)), SizeMismatch);
  CHECK(VertexSet::of(5, {1}) < VertexSet::of(5, {0, 1}));
  CHECK(VertexSet::of(5, {1, 2}) < VertexSet::of(5, {0, 3}));
  CHECK(!(VertexSet::of(5, {0, 3}) < VertexSet::of(5, {1, 2})));
}

TEST_CASE("builder rejects loops and out-of-range vertices") {
  Graph::Builder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), MalformedInput);
  CHECK_THROWS_AS(b.add_edge(0, 3), VertexOutOfRange);
  CHECK_THROWS_AS(Graph(kMaxOrder + 1), TooLarge);
}

TEST_CASE("switch examples") {
  const Graph p4 = path_graph(4);
  CHECK(are_isomorphic(seidel_switch(p4, VertexSet::of(4, {0})), pattern("paw")));
  const Graph c4 = cycle_graph(4);
  CHECK(seidel_switch(c4, VertexSet(4)) == c4);
  CHECK(are_isomorphic(seidel_switch(c4, VertexSet::of(4, {2})), pattern("claw")));
  CHECK(are_isomorphic(seidel_switch(c4, VertexSet::of(4, {0, 2})), edgeless_graph(4)));
  CHECK_THROWS_AS(seidel_switch(c4, VertexSet(5)), SizeMismatch);
}

TEST_CASE("complement and induced examples") {
  CHECK(complement(complete_graph(3)) == edgeless_graph(3));
  CHECK(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  CHECK(are_isomorphic(complement(pattern("diamond")), pattern("k2+2k1")));
  const Graph c5 = cycle_graph(5);
  CHECK(induced(c5, VertexSet::of(5, {0, 1, 2, 3})) == path_graph(4));
  CHECK(induced(pattern("paw"), VertexSet::of(4, {0, 1, 2})).edge_count() == 3);
  CHECK(are_isomorphic(induced(cycle_graph(6), VertexSet::of(6, {0, 1, 3, 4})), pattern("2k2")));
}

TEST_CASE("switch matches the pairwise definition") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(rng() % 80);
    const Graph g = oracles::random_graph(n, 0.4, rng);
    const VertexSet a = oracles::random_set(n, rng);
    CHECK(seidel_switch(g, a) == oracles::naive_switch(g, a));
  }
}

TEST_CASE("switching algebra on random graphs") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 140);
    const Graph g = oracles::random_graph(n, 0.3, rng);
    const VertexSet a = oracles::random_set(n, rng);
    const VertexSet b = oracles::random_set(n, rng);
    CHECK(seidel_switch(seidel_switch(g, a), a) == g);
    CHECK(seidel_switch(g, a) == seidel_switch(g, a.complement()));
    CHECK(seidel_switch(seidel_switch(g, a), b) == seidel_switch(g, a ^ b));
    CHECK(complement(seidel_switch(g, a)) == seidel_switch(complement(g), a));
  }
}

TEST_CASE("induced subgraph commutes with switching") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = oracles::random_graph(n, 0.5, rng);
    const VertexSet a = oracles::random_set(n, rng);
    const VertexSet u = oracles::random_set(n, rng);
    const auto ids = u.to_vector();
    VertexSet local(u.count());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (a.contains(ids[i])) local.insert(static_cast<int>(i));
    }
    CHECK(induced(seidel_switch(g, a), u) == seidel_switch(induced(g, u), local));
  }
}

TEST_CASE("density identity for balanced switches") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const Graph g = oracles::random_graph(n, static_cast<double>(rng() % 100) / 100.0, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    VertexSet a(n);
    for (int i = 0; i < n / 2; ++i) a.insert(perm[static_cast<std::size_t>(i)]);
    const Graph s = seidel_switch(g, a);
    const VertexSet b = a.complement();
    std::size_t inside = 0;
    for (auto [u, v] : g.edges()) {
      if (a.contains(u) == a.contains(v)) ++inside;
    }
    const std::size_t cross = static_cast<std::size_t>(n / 2) * static_cast<std::size_t>((n + 1) / 2);
    CHECK(g.edge_count() + s.edge_count() == 2 * inside + cross);
    CHECK(g.edge_count() + s.edge_count() >= cross);
    CHECK(b.count() == (n + 1) / 2);
  }
}

TEST_CASE("module test") {
  const Graph g = pattern("paw");
  CHECK(is_module(g, VertexSet::of(4, {0})));
  CHECK(is_module(g, VertexSet::full(4)));
  const Graph c4 = cycle_graph(4);
  CHECK(is_module(c4, VertexSet::of(4, {0, 2})));
  CHECK(!is_module(c4, VertexSet::of(4, {0, 1})));
}

TEST_CASE("components and co-components") {
  const Graph g = pattern("k3+k2+k1");
  const auto cs = components(g);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].count() == 3);
  CHECK(co_components(complement(g)).size() == 3);
  CHECK(components(Graph(0)).empty());
}

TEST_CASE("graph6 fixed strings") {
  CHECK(to_graph6(cycle_graph(4)) == "Cl");
  CHECK(to_graph6(path_graph(5)) == "DhC");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(3)) == "B?");
  const Graph petersen = parse_graph6("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
  CHECK(parse_graph6(">>graph6<<Cl\n") == cycle_graph(4));
  const std::string p63 = to_graph6(path_graph(63));
  CHECK(p63.size() == 330);
  CHECK(p63.substr(0, 4) == "~??~");
  CHECK(to_graph6(complete_graph(70)).size() == 407);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng() % 300);
    const Graph g = oracles::random_graph(n, 0.2, rng);
    const std::string s = to_graph6(g);
    CHECK(parse_graph6(s) == g);
    CHECK(to_graph6(parse_graph6(s)) == s);
  }
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6);
  CHECK_THROWS_AS(parse_graph6("C"), MalformedGraph6);
  CHECK_THROWS_AS(parse_graph6("Cll"), MalformedGraph6);
  CHECK_THROWS_AS(parse_graph6("C "), MalformedGraph6);
  CHECK_THROWS_AS(parse_graph6("~@MG"), TooLarge);
  std::istringstream in("Cl\n\nDhC\n");
  CHECK(read_graph6_lines(in).size() == 2);
}

TEST_CASE("edge list format") {
  const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g == path_graph(4));
  CHECK(parse_edge_list(to_edge_list(pattern("house"))) == pattern("house"));
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), VertexOutOfRange);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), MalformedInput);
}

TEST_CASE("canonical form is a complete invariant on small graphs") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(rng() % 11);
    const Graph g = oracles::random_graph(n, 0.5, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = oracles::relabel(g, perm);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_graph(g) == canonical_graph(h));
    const auto lab = canonical_labeling(g);
    Graph::Builder b(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (g.adjacent(lab[static_cast<std::size_t>(i)], lab[static_cast<std::size_t>(j)])) b.add_edge(i, j);
      }
    }
    CHECK(b.build() == canonical_graph(g));
  }
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracles::random_graph(n, 0.5, rng);
    const Graph h = oracles::random_graph(n, 0.5, rng);
    CHECK((canonical_form(g) == canonical_form(h)) == oracles::brute_isomorphic(g, h));
  }
  CHECK(canonical_form(cycle_graph(4)) != canonical_form(pattern("2k2")));
  CHECK_THROWS_AS(canonical_form(Graph(11)), TooLarge);
}

TEST_CASE("canonical form on regular graphs") {
  const Graph petersen = parse_graph6("IheA@GUAo");
  std::mt19937_64 rng(17);
  std::vector<int> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(oracles::relabel(petersen, perm)) == canonical_form(petersen));
  }
  CHECK(canonical_form(cycle_graph(10)) != canonical_form(pattern("2c5")));
  CHECK(canonical_form(pattern("c3+c6")) != canonical_form(pattern("3c3")));
  CHECK(!are_isomorphic(petersen, parse_graph6(to_graph6(pattern("2c5")))));
}

TEST_CASE("all graphs by order match brute-force enumeration") {
  for (int n = 0; n <= 5; ++n) {
    const auto fast = all_graphs(n);
    const auto slow = oracles::brute_all_graphs(n);
    REQUIRE(fast.size() == slow.size());
    for (const auto& g : slow) {
      CHECK(std::count_if(fast.begin(), fast.end(), [&](const Graph& h) { return oracles::brute_isomorphic(g, h); }) == 1);
    }
  }
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(all_graphs(n).size() == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("switching class counts by order") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 7, 16, 54};
  for (int n = 0; n <= 7; ++n) {
    std::set<CanonicalForm> keys;
    for (const auto& g : all_graphs(n)) keys.insert(switching_class_key(g));
    CHECK(keys.size() == expected[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("switching class examples") {
  auto same_set = [](const std::vector<Graph>& got, const std::vector<Graph>& want) {
    if (got.size() != want.size()) return false;
    return std::all_of(want.begin(), want.end(), [&](const Graph& w) {
      return std::any_of(got.begin(), got.end(), [&](const Graph& g) { return are_isomorphic(g, w); });
    });
  };
  CHECK(same_set(switching_class(cycle_graph(4)), {cycle_graph(4), pattern("claw"), pattern("4k1")}));
  CHECK(same_set(switching_class(cycle_graph(5)), {cycle_graph(5), pattern("bull"), pattern("gem"), pattern("p4+k1")}));
  CHECK(same_set(switching_class(cycle_graph(6)),
                 {cycle_graph(6), profile_graph(Profile::parse("(1,1,2,1,1)")), profile_graph(Profile::parse("(2,1,2,0,1)")),
                  profile_graph(Profile::parse("(1,2,2,1)")), profile_graph(Profile::parse("(2,0,2,0,2)")),
                  profile_graph(Profile::parse("(2,2,2)"))}));
  CHECK(switching_class(Graph(1)).size() == 1);
  CHECK(switching_class(Graph(0)).size() == 1);
}

TEST_CASE("switching class is closed and contains the seed") {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracles::random_graph(n, 0.5, rng);
    const auto forms = switching_class_forms(g);
    CHECK(std::binary_search(forms.begin(), forms.end(), canonical_form(g)));
    const VertexSet a = oracles::random_set(n, rng);
    CHECK(switching_class_forms(seidel_switch(g, a)) == forms);
    for (const auto& h : switching_class(g)) CHECK(switching_class_forms(h) == forms);
  }
}

TEST_CASE("order-four classes have sizes three, three and five") {
  std::map<CanonicalForm, int> sizes;
  for (const auto& g : all_graphs(4)) ++sizes[switching_class_key(g)];
  std::vector<int> counts;
  for (auto& [k, c] : sizes) counts.push_back(c);
  std::sort(counts.begin(), counts.end());
  CHECK(counts == std::vector<int>{3, 3, 5});
}

TEST_CASE("switching equivalence examples") {
  CHECK(are_switching_equivalent(pattern("2k2"), complete_graph(4)));
  CHECK(!are_switching_equivalent(cycle_graph(4), path_graph(4)));
  CHECK(are_switching_equivalent(pattern("bull"), pattern("bull")));
  CHECK_THROWS_AS((void)are_switching_equivalent(cycle_graph(4), cycle_graph(5)), SizeMismatch);
  CHECK_THROWS_AS((void)are_switching_equivalent(Graph(11), Graph(11)), TooLarge);
}

TEST_CASE("oracle examples") {
  const auto a = oracle_upper(cycle_graph(4), is_split);
  REQUIRE(a.has_value());
  CHECK(a->to_string() == "1");
  CHECK(is_split(seidel_switch(cycle_graph(4), *a)));
  const auto all = oracle_upper_all(cycle_graph(4), is_split);
  CHECK(std::find(all.begin(), all.end(), VertexSet::of(4, {1, 3})) != all.end());
  const auto t = oracle_upper(complete_graph(3), is_triangle_free);
  REQUIRE(t.has_value());
  CHECK(t->count() == 1);
  CHECK(oracle_upper(path_graph(3), is_split)->empty());
  CHECK(oracle_lower(pattern("k2+k1"), is_paw_free));
  CHECK(!oracle_lower(cycle_graph(4), [](const Graph& h) { return !contains_induced(h, cycle_graph(4)); }));
  CHECK_THROWS_AS((void)oracle_upper(Graph(23), is_split), TooLarge);
  CHECK_THROWS_AS((void)oracle_lower(Graph(23), is_split), TooLarge);
}

TEST_CASE("oracle order and parallel determinism") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracles::random_graph(n, 0.5, rng);
    const auto all = oracle_upper_all(g, is_split);
    CHECK(all == oracles::brute_upper_all(g, is_split));
    CHECK(std::is_sorted(all.begin(), all.end()));
    const auto first = oracle_upper(g, is_split);
    CHECK(first.has_value() == !all.empty());
    if (first) CHECK(*first == all.front());
    const auto par = oracle_upper(g, is_split, OracleOptions{4});
    CHECK(par == first);
    CHECK(oracle_lower(g, is_split, OracleOptions{3}) == oracle_lower(g, is_split));
  }
}

TEST_CASE("normalized switching sets exclude vertex zero") {
  const VertexSet a = VertexSet::of(5, {0, 2});
  CHECK(normalize_switching_set(a) == VertexSet::of(5, {1, 3, 4}));
  CHECK(normalize_switching_set(VertexSet::of(5, {2})) == VertexSet::of(5, {2}));
}

TEST_CASE("upper and lower membership are hereditary") {
  const GraphPredicate preds[] = {is_split, is_paw_free, is_bipartite};
  std::mt19937_64 rng(20);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = oracles::random_graph(n, 0.5, rng);
    const VertexSet u = oracles::random_set(n, rng);
    const Graph h = induced(g, u);
    for (const auto& p : preds) {
      if (oracle_upper(g, p)) CHECK(oracle_upper(h, p).has_value());
      if (oracle_lower(g, p)) CHECK(oracle_lower(h, p));
    }
  }
}

}  // TEST_SUITE
