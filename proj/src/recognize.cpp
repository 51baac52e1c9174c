#include "switchkit/recognize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "switchkit/induced.hpp"
#include "switchkit/patterns.hpp"

namespace switchkit {

namespace {

bool is_clique_set(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) {
    if (ok && !(s - g.closed_neighbors(v)).empty()) ok = false;
  });
  return ok;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool valid_split(const Graph& g, const SplitPartition& p) {
  return is_clique_set(g, p.clique) && is_independent_set(g, p.independent);
}

/// Degree order, largest first, ties by index.
std::vector<int> by_degree_desc(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

/// Length m of the clique prefix in degree order.
int split_prefix(const Graph& g, const std::vector<int>& order) {
  int m = 0;
  for (int i = 1; i <= g.order(); ++i) {
    if (g.degree(order[static_cast<std::size_t>(i - 1)]) >= i - 1) m = i;
  }
  return m;
}

bool clique_search(const Graph& g, const VertexSet& cand, int k, bool complement_edges) {
  if (k <= 0) return true;
  if (cand.count() < k) return false;
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    VertexSet rest = cand;
    // Restrict to later vertices to avoid repeats.
    for (int u = cand.first(); u >= 0 && u <= v; u = cand.next(u)) rest.erase(u);
    const VertexSet nv = complement_edges ? rest - g.neighbors(v) : rest & g.neighbors(v);
    if (clique_search(g, nv, k - 1, complement_edges)) return true;
  }
  return false;
}

}  // namespace

bool is_split(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  int m = 0;
  for (int i = 1; i <= n; ++i) {
    if (deg[static_cast<std::size_t>(i - 1)] >= i - 1) m = i;
  }
  long long head = 0;
  long long tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += deg[static_cast<std::size_t>(i)];
  return head == static_cast<long long>(m) * (m - 1) + tail;
}

std::vector<SplitPartition> split_partitions(const Graph& g) {
  if (!is_split(g)) return {};
  const int n = g.order();
  const auto order = by_degree_desc(g);
  const int m = split_prefix(g, order);
  SplitPartition base{VertexSet(n), VertexSet(n)};
  for (int i = 0; i < n; ++i) {
    (i < m ? base.clique : base.independent).insert(order[static_cast<std::size_t>(i)]);
  }
  if (!valid_split(g, base)) throw std::logic_error("degree prefix of a split graph is not a split partition");

  std::vector<SplitPartition> out;
  auto consider = [&](SplitPartition p) {
    if (valid_split(g, p)) out.push_back(std::move(p));
  };
  consider(base);
  const auto ks = base.clique.to_vector();
  const auto is = base.independent.to_vector();
  for (int x : ks) {
    SplitPartition p = base;
    p.clique.erase(x);
    p.independent.insert(x);
    consider(p);
  }
  for (int y : is) {
    SplitPartition p = base;
    p.independent.erase(y);
    p.clique.insert(y);
    consider(p);
  }
  for (int x : ks) {
    for (int y : is) {
      SplitPartition p = base;
      p.clique.erase(x);
      p.independent.insert(x);
      p.independent.erase(y);
      p.clique.insert(y);
      consider(p);
    }
  }
  std::sort(out.begin(), out.end(), [](const SplitPartition& a, const SplitPartition& b) { return a.clique < b.clique; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<PseudoSplitPartition> pseudo_split_partition(const Graph& g) {
  const int n = g.order();
  if (auto parts = split_partitions(g); !parts.empty()) {
    return PseudoSplitPartition{parts.front().clique, VertexSet(n), parts.front().independent};
  }
  const auto c5 = find_induced_cycle(g, 5);
  if (!c5) return std::nullopt;
  const VertexSet h = VertexSet::of(n, *c5);
  PseudoSplitPartition p{VertexSet(n), h, VertexSet(n)};
  bool ok = true;
  (h.complement()).for_each([&](int v) {
    const VertexSet seen = g.neighbors(v) & h;
    if (seen == h) {
      p.clique.insert(v);
    } else if (seen.empty()) {
      p.independent.insert(v);
    } else {
      ok = false;
    }
  });
  if (!ok || !is_clique_set(g, p.clique) || !is_independent_set(g, p.independent)) return std::nullopt;
  return p;
}

bool is_pseudo_split(const Graph& g) { return pseudo_split_partition(g).has_value(); }

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    const VertexSet nu = g.neighbors(u);
    for (int v = nu.next(u); v >= 0; v = nu.next(v)) {
      if (nu.intersects(g.neighbors(v))) return false;
    }
  }
  return true;
}

bool is_paw_free(const Graph& g) {
  static const Graph paw = pattern("paw");
  return !contains_induced(g, paw).has_value();
}

bool is_complete_multipartite(const Graph& g) {
  for (const auto& part : co_components(g)) {
    if (!is_independent_set(g, part)) return false;
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      bool clash = false;
      g.neighbors(v).for_each([&](int u) {
        auto& su = side[static_cast<std::size_t>(u)];
        if (su < 0) {
          su = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(u);
        } else if (su == side[static_cast<std::size_t>(v)]) {
          clash = true;
        }
      });
      if (clash) return false;
    }
  }
  return true;
}

std::optional<std::pair<VertexSet, VertexSet>> complete_bipartite_sides(const Graph& g) {
  const int n = g.order();
  const auto parts = co_components(g);
  if (parts.size() > 2) return std::nullopt;
  for (const auto& part : parts) {
    if (!is_independent_set(g, part)) return std::nullopt;
  }
  if (parts.empty()) return std::pair{VertexSet(n), VertexSet(n)};
  if (parts.size() == 1) return std::pair{parts[0], VertexSet(n)};
  return std::pair{parts[0], parts[1]};
}

bool is_complete_bipartite(const Graph& g) { return complete_bipartite_sides(g).has_value(); }

bool is_bipartite_chain(const Graph& g) {
  static const PatternFamily family{pattern("c3"), pattern("2k2"), pattern("c5")};
  return is_family_free(g, family);
}

bool is_star_costar_free(const Graph& g, int p, int q) {
  for (int v = 0; v < g.order(); ++v) {
    if (has_independent_set(g, g.neighbors(v), p)) return false;
    if (has_clique(g, g.closed_neighbors(v).complement(), q)) return false;
  }
  return true;
}

bool has_clique(const Graph& g, const VertexSet& within, int k) { return clique_search(g, within, k, false); }

bool is_chordal(const Graph& g) {
  VertexSet alive = VertexSet::full(g.order());
  while (!alive.empty()) {
    int simplicial = -1;
    alive.for_each([&](int v) {
      if (simplicial < 0 && is_clique_set(g, g.neighbors(v) & alive)) simplicial = v;
    });
    if (simplicial < 0) return false;
    alive.erase(simplicial);
  }
  return true;
}

namespace {

// Krausz cover: a vertex already in one clique must put all its remaining
// edges into a single second clique; a fresh vertex splits its neighbors
// into at most two cliques.
bool krausz(const Graph& g, std::vector<VertexSet>& open, std::vector<int>& load) {
  int u = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (!open[static_cast<std::size_t>(v)].empty() && (u < 0 || load[static_cast<std::size_t>(v)] > load[static_cast<std::size_t>(u)])) {
      u = v;
    }
  }
  if (u < 0) return true;
  const VertexSet rest = open[static_cast<std::size_t>(u)];
  auto try_clique = [&](const VertexSet& side) {
    VertexSet members = side;
    members.insert(u);
    bool ok = true;
    members.for_each([&](int x) {
      if (!ok) return;
      if (load[static_cast<std::size_t>(x)] >= 2) ok = false;
      VertexSet others = members;
      others.erase(x);
      if (!(others - open[static_cast<std::size_t>(x)]).empty()) ok = false;
    });
    if (!ok) return false;
    members.for_each([&](int x) {
      VertexSet others = members;
      others.erase(x);
      open[static_cast<std::size_t>(x)] = open[static_cast<std::size_t>(x)] - others;
      ++load[static_cast<std::size_t>(x)];
    });
    const bool solved = krausz(g, open, load);
    members.for_each([&](int x) {
      VertexSet others = members;
      others.erase(x);
      open[static_cast<std::size_t>(x)] = open[static_cast<std::size_t>(x)] | others;
      --load[static_cast<std::size_t>(x)];
    });
    return solved;
  };
  if (load[static_cast<std::size_t>(u)] >= 2) return false;
  if (load[static_cast<std::size_t>(u)] == 1) return try_clique(rest);
  const std::vector<int> nbrs = rest.to_vector();
  const int first = nbrs.front();
  const int k = static_cast<int>(nbrs.size()) - 1;
  if (k > 30) return false;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    VertexSet side(g.order());
    side.insert(first);
    for (int i = 0; i < k; ++i) {
      if ((m >> i) & 1U) side.insert(nbrs[static_cast<std::size_t>(i + 1)]);
    }
    const VertexSet other = rest - side;
    if (!is_clique_set(g, side) || !is_clique_set(g, other)) continue;
    if (try_clique(side)) return true;
  }
  return false;
}

}  // namespace

bool is_line_graph(const Graph& g) {
  std::vector<VertexSet> open;
  for (int v = 0; v < g.order(); ++v) open.push_back(g.neighbors(v));
  std::vector<int> load(static_cast<std::size_t>(g.order()), 0);
  return krausz(g, open, load);
}

bool has_independent_set(const Graph& g, const VertexSet& within, int k) { return clique_search(g, within, k, true); }

}  // namespace switchkit
