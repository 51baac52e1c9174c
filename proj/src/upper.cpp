#include "switchkit/upper.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "switchkit/errors.hpp"
#include "switchkit/induced.hpp"
#include "switchkit/oracle.hpp"
#include "switchkit/patterns.hpp"

namespace switchkit {

namespace {

void check_desk_scale(const Graph& g, const char* what) {
  if (g.order() > kMaxOracleOrder) {
    throw TooLarge(std::string(what) + " needs order <= " + std::to_string(kMaxOracleOrder) + ", got " +
                   std::to_string(g.order()));
  }
}

/// Split partitions of g[within], in g's numbering.
std::vector<SplitPartition> split_partitions_of(const Graph& g, const VertexSet& within) {
  const auto ids = within.to_vector();
  std::vector<SplitPartition> out;
  for (const auto& p : split_partitions(induced(g, within))) {
    out.push_back({p.clique.lift(g.order(), ids), p.independent.lift(g.order(), ids)});
  }
  return out;
}

std::vector<PqSplitPartition> pq_partitions_of(const Graph& g, const VertexSet& within, int p, int q) {
  const auto ids = within.to_vector();
  std::vector<PqSplitPartition> out;
  for (const auto& part : pq_split_partitions(induced(g, within), p, q)) {
    out.push_back({part.s.lift(g.order(), ids), part.t.lift(g.order(), ids)});
  }
  return out;
}

/// Co-components of g[within], in g's numbering.
std::vector<VertexSet> co_components_of(const Graph& g, const VertexSet& within) {
  const auto ids = within.to_vector();
  std::vector<VertexSet> out;
  for (const auto& c : co_components(induced(g, within))) out.push_back(c.lift(g.order(), ids));
  return out;
}

VertexSet closed_pair(const Graph& g, int u, int v) { return g.closed_neighbors(u) | g.closed_neighbors(v); }

/// Ordered (u, v) loop of the split procedure; stops when visit returns true.
template <class Visit>
void split_candidates(const Graph& g, Visit&& visit) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const VertexSet common = g.neighbors(u) & g.neighbors(v);
      const VertexSet far = closed_pair(g, u, v).complement();
      const auto parts1 = split_partitions_of(g, common);
      if (parts1.empty()) continue;
      const auto parts2 = split_partitions_of(g, far);
      if (parts2.empty()) continue;
      VertexSet base = g.neighbors(u) - g.closed_neighbors(v);
      base.insert(u);
      base.insert(v);
      for (const auto& p1 : parts1) {
        for (const auto& p2 : parts2) {
          if (visit(base | p1.clique | p2.independent)) return;
        }
      }
    }
  }
}

/// Each 5-subset h inducing a member of the switching class of C5, with the
/// vertex groups seen as h1 and h2 from outside.
struct C5Frame {
  VertexSet h1;
  VertexSet h2;
  VertexSet sees_h1;
  VertexSet sees_h2;
};

template <class Visit>
void pseudo_split_candidates(const Graph& g, Visit&& visit) {
  const int n = g.order();
  if (n < 5) return;
  std::vector<int> pick{0, 1, 2, 3, 4};
  while (true) {
    const VertexSet h = VertexSet::of(n, pick);
    if (auto side = c5_switch_side(induced(g, h))) {
      C5Frame f{side->lift(n, pick), VertexSet(n), VertexSet(n), VertexSet(n)};
      f.h2 = h - f.h1;
      bool ok = true;
      h.complement().for_each([&](int x) {
        const VertexSet seen = g.neighbors(x) & h;
        if (seen == f.h1) {
          f.sees_h1.insert(x);
        } else if (seen == f.h2) {
          f.sees_h2.insert(x);
        } else {
          ok = false;
        }
      });
      if (ok) {
        const auto parts1 = split_partitions_of(g, f.sees_h1);
        const auto parts2 = parts1.empty() ? std::vector<SplitPartition>{} : split_partitions_of(g, f.sees_h2);
        for (const auto& p1 : parts1) {
          for (const auto& p2 : parts2) {
            if (visit(f.h1 | p1.clique | p2.independent)) return;
          }
        }
      }
    }
    int i = 4;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - 5 + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < 5; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<VertexSet> sorted_unique(std::set<VertexSet, std::less<>> s) { return {s.begin(), s.end()}; }

}  // namespace

std::optional<VertexSet> upper_split(const Graph& g) {
  if (is_split(g)) return VertexSet(g.order());
  std::optional<VertexSet> found;
  split_candidates(g, [&](const VertexSet& a) {
    if (!is_split(seidel_switch(g, a))) return false;
    found = a;
    return true;
  });
  return found;
}

std::vector<VertexSet> enumerate_upper_split(const Graph& g) {
  std::set<VertexSet, std::less<>> found;
  auto keep = [&](const VertexSet& a) {
    if (is_split(seidel_switch(g, a))) found.insert(normalize_switching_set(a));
  };
  if (is_split(g)) {
    const SplitPartition base = split_partitions(g).front();
    auto choices = [](const VertexSet& side) {
      std::vector<VertexSet> out{VertexSet(side.universe()), side};
      side.for_each([&](int v) {
        out.push_back(VertexSet::of(side.universe(), {v}));
        VertexSet rest = side;
        rest.erase(v);
        out.push_back(rest);
      });
      return out;
    };
    for (const auto& a : choices(base.clique)) {
      for (const auto& b : choices(base.independent)) keep(a | b);
    }
  } else {
    split_candidates(g, [&](const VertexSet& a) {
      keep(a);
      return false;
    });
  }
  return sorted_unique(std::move(found));
}

std::optional<VertexSet> c5_switch_side(const Graph& h) {
  if (h.order() != 5) return std::nullopt;
  for (std::uint64_t m = 0; m < 32; ++m) {
    if (std::popcount(m) < 3) continue;
    const VertexSet b = VertexSet::from_mask(5, m);
    const Graph s = seidel_switch(h, b);
    bool two_regular = true;
    for (int v = 0; v < 5 && two_regular; ++v) two_regular = s.degree(v) == 2;
    if (two_regular) return b;
  }
  return std::nullopt;
}

std::optional<VertexSet> upper_pseudo_split(const Graph& g) {
  if (is_pseudo_split(g)) return VertexSet(g.order());
  if (auto a = upper_split(g)) return a;
  std::optional<VertexSet> found;
  pseudo_split_candidates(g, [&](const VertexSet& a) {
    if (!is_pseudo_split(seidel_switch(g, a))) return false;
    found = a;
    return true;
  });
  return found;
}

std::vector<VertexSet> enumerate_upper_pseudo_split(const Graph& g) {
  auto split = enumerate_upper_split(g);
  std::set<VertexSet, std::less<>> found(split.begin(), split.end());
  pseudo_split_candidates(g, [&](const VertexSet& a) {
    if (is_pseudo_split(seidel_switch(g, a))) found.insert(normalize_switching_set(a));
    return false;
  });
  return sorted_unique(std::move(found));
}

std::string to_string(PawFreeStep step) {
  switch (step) {
    case PawFreeStep::AlreadyFree:
      return "already-free";
    case PawFreeStep::TriangleFree:
      return "triangle-free";
    case PawFreeStep::CompleteMultipartite:
      return "complete-multipartite";
    case PawFreeStep::NonAdjacentOutside:
      return "non-adjacent-outside";
    case PawFreeStep::NonAdjacentCommonOffU3:
      return "non-adjacent-common-off-u3";
    case PawFreeStep::NonAdjacentCommonOnU3:
      return "non-adjacent-common-on-u3";
    case PawFreeStep::AdjacentCoComponents:
      return "adjacent-co-components";
  }
  return "unknown";
}

std::optional<VertexSet> upper_triangle_free(const Graph& g) { return oracle_upper(g, is_triangle_free); }

std::optional<VertexSet> upper_complete_multipartite(const Graph& g) {
  return oracle_upper(g, is_complete_multipartite);
}

std::optional<PawFreeResult> upper_paw_free_traced(const Graph& g) {
  check_desk_scale(g, "upper paw-free");
  const int n = g.order();
  if (is_paw_free(g)) return PawFreeResult{VertexSet(n), PawFreeStep::AlreadyFree};
  if (auto a = upper_triangle_free(g)) return PawFreeResult{*a, PawFreeStep::TriangleFree};
  if (auto a = upper_complete_multipartite(g)) return PawFreeResult{*a, PawFreeStep::CompleteMultipartite};

  auto works = [&](const VertexSet& a) { return is_paw_free(seidel_switch(g, a)); };

  for (int u1 = 0; u1 < n; ++u1) {
    for (int u2 = u1 + 1; u2 < n; ++u2) {
      if (g.adjacent(u1, u2)) continue;
      const VertexSet both = closed_pair(g, u1, u2);
      const VertexSet outside = both.complement();
      for (int u3 = outside.first(); u3 >= 0; u3 = outside.next(u3)) {
        const VertexSet trio = VertexSet::of(n, {u1, u2, u3});
        VertexSet a(n);
        for (int x = 0; x < n; ++x) {
          if ((g.closed_neighbors(x) & trio).count() <= 1) a.insert(x);
        }
        if (works(a)) return PawFreeResult{a, PawFreeStep::NonAdjacentOutside};
      }
      const VertexSet common = g.neighbors(u1) & g.neighbors(u2);
      const VertexSet sym = g.closed_neighbors(u1) ^ g.closed_neighbors(u2);
      for (int u3 = common.first(); u3 >= 0; u3 = common.next(u3)) {
        const VertexSet off_u3 = outside | (sym - g.neighbors(u3));
        if (works(off_u3)) return PawFreeResult{off_u3, PawFreeStep::NonAdjacentCommonOffU3};
        const VertexSet on_u3 = outside | (sym & g.neighbors(u3));
        if (works(on_u3)) return PawFreeResult{on_u3, PawFreeStep::NonAdjacentCommonOnU3};
      }
    }
  }

  for (int u1 = 0; u1 < n; ++u1) {
    for (int u2 = u1 + 1; u2 < n; ++u2) {
      if (!g.adjacent(u1, u2)) continue;
      const VertexSet both = closed_pair(g, u1, u2);
      const auto inner = co_components_of(g, g.neighbors(u1) & g.neighbors(u2));
      const auto outer = co_components_of(g, both.complement());
      const VertexSet sym = g.neighbors(u1) ^ g.neighbors(u2);
      auto small_subsets = [](std::size_t k) {
        std::vector<std::vector<std::size_t>> out{{}};
        for (std::size_t i = 0; i < k; ++i) out.push_back({i});
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = i + 1; j < k; ++j) out.push_back({i, j});
        }
        return out;
      };
      for (const auto& drop : small_subsets(inner.size())) {
        VertexSet x(n);
        for (std::size_t i = 0; i < inner.size(); ++i) {
          if (std::find(drop.begin(), drop.end(), i) == drop.end()) x |= inner[i];
        }
        for (const auto& take : small_subsets(outer.size())) {
          VertexSet y(n);
          for (std::size_t j : take) y |= outer[j];
          VertexSet a = x | y;
          if (!x.empty()) {
            a |= sym & g.neighbors(x.first());
          } else {
            const VertexSet rest = (both | y).complement();
            if (rest.empty()) continue;
            a |= sym - g.neighbors(rest.first());
          }
          if (works(a)) return PawFreeResult{a, PawFreeStep::AdjacentCoComponents};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> upper_paw_free(const Graph& g) {
  if (auto r = upper_paw_free_traced(g)) return r->a;
  return std::nullopt;
}

std::optional<VertexSet> upper_bipartite(const Graph& g) {
  check_desk_scale(g, "upper bipartite");
  const int n = g.order();
  if (n == 0) return VertexSet(0);
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < count; ++m) {
    const VertexSet x = VertexSet::from_mask(n, (m << 1) | 1U);
    const VertexSet y = x.complement();
    const auto sx = complete_bipartite_sides(induced(g, x));
    if (!sx) continue;
    const auto sy = complete_bipartite_sides(induced(g, y));
    if (!sy) continue;
    const VertexSet a = sx->first.lift(n, x.to_vector()) | sy->first.lift(n, y.to_vector());
    if (is_bipartite(seidel_switch(g, a))) return a;
  }
  return std::nullopt;
}

std::vector<PqSplitPartition> pq_split_partitions(const Graph& g, int p, int q) {
  if (p < 1 || q < 1) throw MalformedInput("(p,q)-split partitions need p, q >= 1");
  check_desk_scale(g, "(p,q)-split partitions");
  const int n = g.order();
  std::vector<PqSplitPartition> out;
  PqSplitPartition cur{VertexSet(n), VertexSet(n)};
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(cur);
      return;
    }
    if (!has_clique(g, cur.s & g.neighbors(v), p)) {
      cur.s.insert(v);
      self(self, v + 1);
      cur.s.erase(v);
    }
    if (!has_independent_set(g, cur.t - g.closed_neighbors(v), q)) {
      cur.t.insert(v);
      self(self, v + 1);
      cur.t.erase(v);
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<VertexSet> upper_star_costar(const Graph& g, int p, int q) {
  if (p < 2 || q < 2) throw MalformedInput("star/co-star switching needs p, q >= 2");
  check_desk_scale(g, "upper star/co-star");
  const int n = g.order();
  if (is_star_costar_free(g, p, q)) return VertexSet(n);
  const int u = 0;
  const auto parts1 = pq_partitions_of(g, g.closed_neighbors(u), q - 1, p - 1);
  if (parts1.empty()) return std::nullopt;
  const auto parts2 = pq_partitions_of(g, g.closed_neighbors(u).complement(), q - 1, p - 1);
  for (const auto& p1 : parts1) {
    for (const auto& p2 : parts2) {
      const VertexSet a = p1.t | p2.s;
      if (is_star_costar_free(seidel_switch(g, a), p, q)) return a;
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> upper_bipartite_chain(const Graph& g) {
  static const PatternFamily obstructions{pattern("2k2"), pattern("k3+k1"), pattern("k4")};
  if (!is_family_free(g, obstructions)) return std::nullopt;
  auto a = upper_bipartite(g);
  if (a && !is_bipartite_chain(seidel_switch(g, *a))) {
    throw std::logic_error("bipartite witness does not give a bipartite chain graph");
  }
  return a;
}

namespace {

constexpr std::array<std::pair<UpperClassId, const char*>, 8> kUpperNames{{
    {UpperClassId::Split, "split"},
    {UpperClassId::PseudoSplit, "pseudo-split"},
    {UpperClassId::PawFree, "paw-free"},
    {UpperClassId::StarCostar, "star-costar"},
    {UpperClassId::Bipartite, "bipartite"},
    {UpperClassId::BipartiteChain, "bipartite-chain"},
    {UpperClassId::TriangleFree, "triangle-free"},
    {UpperClassId::CompleteMultipartite, "complete-multipartite"},
}};

}  // namespace

std::vector<UpperClassId> all_upper_classes() {
  std::vector<UpperClassId> out;
  for (auto [id, name] : kUpperNames) out.push_back(id);
  return out;
}

std::string to_string(UpperClassId id) {
  for (auto [i, name] : kUpperNames) {
    if (i == id) return name;
  }
  return "unknown";
}

std::optional<UpperClassId> parse_upper_class(std::string_view name) {
  for (auto [id, n] : kUpperNames) {
    if (name == n) return id;
  }
  return std::nullopt;
}

GraphPredicate upper_class_predicate(UpperClassId id, int p, int q) {
  switch (id) {
    case UpperClassId::Split:
      return [](const Graph& s) { return is_split(s); };
    case UpperClassId::PseudoSplit:
      return [](const Graph& s) { return is_pseudo_split(s); };
    case UpperClassId::PawFree:
      return [](const Graph& s) { return is_paw_free(s); };
    case UpperClassId::StarCostar:
      return [p, q](const Graph& s) { return is_star_costar_free(s, p, q); };
    case UpperClassId::Bipartite:
      return [](const Graph& s) { return is_bipartite(s); };
    case UpperClassId::BipartiteChain:
      return [](const Graph& s) { return is_bipartite_chain(s); };
    case UpperClassId::TriangleFree:
      return [](const Graph& s) { return is_triangle_free(s); };
    case UpperClassId::CompleteMultipartite:
      return [](const Graph& s) { return is_complete_multipartite(s); };
  }
  throw std::invalid_argument("unknown upper class");
}

std::optional<VertexSet> solve_upper(const Graph& g, UpperClassId id, int p, int q) {
  switch (id) {
    case UpperClassId::Split:
      return upper_split(g);
    case UpperClassId::PseudoSplit:
      return upper_pseudo_split(g);
    case UpperClassId::PawFree:
      return upper_paw_free(g);
    case UpperClassId::StarCostar:
      return upper_star_costar(g, p, q);
    case UpperClassId::Bipartite:
      return upper_bipartite(g);
    case UpperClassId::BipartiteChain:
      return upper_bipartite_chain(g);
    case UpperClassId::TriangleFree:
      return upper_triangle_free(g);
    case UpperClassId::CompleteMultipartite:
      return upper_complete_multipartite(g);
  }
  throw std::invalid_argument("unknown upper class");
}

bool has_enumeration(UpperClassId id) { return id == UpperClassId::Split || id == UpperClassId::PseudoSplit; }

std::vector<VertexSet> enumerate_upper(const Graph& g, UpperClassId id) {
  if (id == UpperClassId::Split) return enumerate_upper_split(g);
  if (id == UpperClassId::PseudoSplit) return enumerate_upper_pseudo_split(g);
  throw std::invalid_argument("enumeration is available for split and pseudo-split only");
}

}  // namespace switchkit
