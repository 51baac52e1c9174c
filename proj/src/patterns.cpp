#include "switchkit/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "switchkit/errors.hpp"

namespace switchkit {

namespace {

void check_positive(int n, std::string_view what) {
  if (n < 0) throw MalformedInput(std::string(what) + " needs a non-negative size");
}

int parse_int(std::string_view s, std::string_view name) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw MalformedInput("unknown pattern '" + std::string(name) + "'");
  }
  return v;
}

Graph base_pattern(std::string_view b, std::string_view full) {
  using E = std::pair<int, int>;
  if (b == "paw") return Graph::from_edges(4, {E{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  if (b == "diamond") return Graph::from_edges(4, {E{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  if (b == "house") return Graph::from_edges(5, {E{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
  if (b == "net") return Graph::from_edges(6, {E{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  if (b == "sun") {
    return Graph::from_edges(6, {E{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}});
  }
  if (b == "domino") {
    return Graph::from_edges(6, {E{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
  }
  if (b == "claw") return complete_bipartite_graph(1, 3);
  if (b == "bull") return Graph::from_edges(5, {E{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
  if (b == "gem") return Graph::from_edges(5, {E{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  if (b == "fork") return Graph::from_edges(5, {E{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  if (b.size() >= 2 && b[0] == 'k') {
    if (auto us = b.find('_'); us != std::string_view::npos) {
      return complete_bipartite_graph(parse_int(b.substr(1, us - 1), full), parse_int(b.substr(us + 1), full));
    }
    return complete_graph(parse_int(b.substr(1), full));
  }
  if (b.size() >= 2 && b[0] == 'p') return path_graph(parse_int(b.substr(1), full));
  if (b.size() >= 2 && b[0] == 'c') return cycle_graph(parse_int(b.substr(1), full));
  if (b.size() >= 2 && b[0] == 'w') return wheel_graph(parse_int(b.substr(1), full));
  throw MalformedInput("unknown pattern '" + std::string(full) + "'");
}

}  // namespace

Graph path_graph(int n) {
  check_positive(n, "path");
  Graph::Builder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw MalformedInput("cycle needs at least 3 vertices");
  Graph::Builder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph complete_graph(int n) {
  check_positive(n, "clique");
  return complement(Graph(n));
}

Graph edgeless_graph(int n) {
  check_positive(n, "edgeless graph");
  return Graph(n);
}

Graph complete_bipartite_graph(int a, int b) {
  check_positive(a, "complete bipartite graph");
  check_positive(b, "complete bipartite graph");
  Graph::Builder bld(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) bld.add_edge(i, a + j);
  }
  return bld.build();
}

Graph wheel_graph(int n) {
  Graph::Builder b(n + 1);
  const Graph c = cycle_graph(n);
  for (auto [u, v] : c.edges()) b.add_edge(u, v);
  for (int i = 0; i < n; ++i) b.add_edge(i, n);
  return b.build();
}

Graph pattern(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  std::string_view s = lower;
  bool co = false;
  if (s.starts_with("co-")) {
    co = true;
    s.remove_prefix(3);
  }
  if (s.empty()) throw MalformedInput("empty pattern name");
  Graph out(0);
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t plus = s.find('+', start);
    std::string_view term = s.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    int count = 1;
    if (digits > 0) {
      count = parse_int(term.substr(0, digits), name);
      term.remove_prefix(digits);
    }
    if (term.empty()) throw MalformedInput("unknown pattern '" + std::string(name) + "'");
    const Graph base = base_pattern(term, name);
    for (int i = 0; i < count; ++i) out = disjoint_union(out, base);
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return co ? complement(out) : out;
}

std::vector<std::string> pattern_names() {
  return {"k1",   "k2",    "k3",      "k4",     "2k1",    "2k2",   "k3+k1",  "k2+k1",  "k2+2k1", "p3",
          "p4",   "p5",    "p3+k1",   "p4+k1",  "c4",     "c5",    "c6",     "c7",     "co-c6",  "k1_3",
          "claw", "paw",   "diamond", "house",  "bull",   "gem",   "fork",   "net",    "sun",    "domino",
          "w4",   "w5",    "k2_3",    "p10",    "c9"};
}

bool Profile::is_concrete() const {
  return std::none_of(entries.begin(), entries.end(), [](int e) { return e == kPlus; });
}

std::string Profile::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ',';
    out += entries[i] == kPlus ? "+" : std::to_string(entries[i]);
  }
  return out + ")";
}

Profile Profile::parse(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
    throw MalformedInput("profile must look like (a1,...,ap)");
  }
  Profile p;
  std::string_view body = std::string_view(t).substr(1, t.size() - 2);
  if (body.empty()) return p;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    std::string_view item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (item == "+") {
      p.entries.push_back(kPlus);
    } else {
      const int v = parse_int(item, text);
      if (v < 0) throw MalformedInput("negative profile entry");
      p.entries.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

Graph profile_graph(const Profile& p) {
  if (!p.is_concrete()) throw MalformedInput("profile " + p.to_string() + " has wildcard entries");
  std::vector<int> first;
  int n = 0;
  for (int e : p.entries) {
    if (e < 0) throw MalformedInput("negative profile entry");
    first.push_back(n);
    n += e;
  }
  Graph::Builder b(n);
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    const int lo = first[i];
    const int hi = lo + p.entries[i];
    for (int u = lo; u < hi; ++u) {
      for (int v = u + 1; v < hi; ++v) b.add_edge(u, v);
      if (i + 1 < p.entries.size()) {
        for (int v = hi; v < hi + p.entries[i + 1]; ++v) b.add_edge(u, v);
      }
    }
  }
  return b.build();
}

namespace {

/// Sizes of the true-twin classes of a connected graph along the induced
/// path they form, or nullopt if they do not form one.
std::optional<std::vector<int>> clique_path_sizes(const Graph& g, const VertexSet& comp) {
  std::vector<VertexSet> classes;
  std::vector<VertexSet> closed;
  comp.for_each([&](int v) {
    const VertexSet nv = g.closed_neighbors(v);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (closed[i] == nv) {
        classes[i].insert(v);
        return;
      }
    }
    VertexSet c(g.order());
    c.insert(v);
    classes.push_back(c);
    closed.push_back(nv);
  });
  const std::size_t t = classes.size();
  if (t == 1) return std::vector<int>{classes[0].count()};
  std::vector<std::vector<std::size_t>> adj(t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (g.adjacent(classes[i].first(), classes[j].first())) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  std::size_t start = t;
  for (std::size_t i = 0; i < t; ++i) {
    if (adj[i].size() > 2) return std::nullopt;
    if (adj[i].size() == 1 && start == t) start = i;
  }
  if (start == t) return std::nullopt;
  std::vector<int> sizes;
  std::size_t prev = t;
  std::size_t cur = start;
  while (true) {
    sizes.push_back(classes[cur].count());
    std::size_t next = t;
    for (std::size_t j : adj[cur]) {
      if (j != prev) next = j;
    }
    if (next == t) break;
    prev = cur;
    cur = next;
  }
  if (sizes.size() != t) return std::nullopt;
  return sizes;
}

/// Concrete values for a positive segment realised by a component.
std::optional<std::vector<int>> fit_segment(const std::vector<int>& seg, const std::vector<int>& sizes) {
  auto ok = [](int want, int got) { return want == Profile::kPlus ? got >= 1 : want == got; };
  if (seg.size() == 2 && sizes.size() == 1) {
    const int c = sizes[0];
    const int a = seg[0];
    const int b = seg[1];
    if (a != Profile::kPlus && b != Profile::kPlus) {
      if (a + b == c) return seg;
      return std::nullopt;
    }
    if (a != Profile::kPlus) return c - a >= 1 ? std::optional(std::vector<int>{a, c - a}) : std::nullopt;
    if (b != Profile::kPlus) return c - b >= 1 ? std::optional(std::vector<int>{c - b, b}) : std::nullopt;
    if (c >= 2) return std::vector<int>{1, c - 1};
    return std::nullopt;
  }
  if (seg.size() != sizes.size()) return std::nullopt;
  for (int orient = 0; orient < 2; ++orient) {
    std::vector<int> s = sizes;
    if (orient == 1) std::reverse(s.begin(), s.end());
    bool all = true;
    for (std::size_t i = 0; i < s.size() && all; ++i) all = ok(seg[i], s[i]);
    if (all) return s;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Profile> matches_profile_family(const Graph& g, const Profile& family) {
  if (g.order() == 0) return Profile{};
  std::vector<std::vector<int>> segments;
  std::vector<std::size_t> seg_start;
  {
    std::vector<int> cur;
    for (std::size_t i = 0; i <= family.entries.size(); ++i) {
      if (i == family.entries.size() || family.entries[i] == 0) {
        if (!cur.empty()) {
          segments.push_back(cur);
          seg_start.push_back(i - cur.size());
        }
        cur.clear();
      } else {
        cur.push_back(family.entries[i]);
      }
    }
  }
  const auto comps = components(g);
  if (comps.size() != segments.size()) return std::nullopt;
  std::vector<std::vector<int>> sizes;
  for (const auto& c : comps) {
    auto s = clique_path_sizes(g, c);
    if (!s) return std::nullopt;
    sizes.push_back(*s);
  }
  std::vector<std::size_t> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    Profile out = family;
    bool all = true;
    for (std::size_t k = 0; k < segments.size() && all; ++k) {
      auto fit = fit_segment(segments[k], sizes[order[k]]);
      if (!fit) {
        all = false;
        break;
      }
      std::copy(fit->begin(), fit->end(), out.entries.begin() + static_cast<std::ptrdiff_t>(seg_start[k]));
    }
    if (all) return out;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

}  // namespace switchkit
