#include "switchkit/graph.hpp"

#include <algorithm>
#include <string>

#include "switchkit/errors.hpp"

namespace switchkit {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw TooLarge("graph order " + std::to_string(n) + " outside [0, " + std::to_string(kMaxOrder) + "]");
  }
}

void check_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw SizeMismatch("vertex set universe " + std::to_string(s.universe()) + " != graph order " +
                       std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n), wpr_(words_for(n)) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(wpr_), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Builder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

VertexSet Graph::neighbors(int v) const {
  VertexSet s(n_);
  auto r = row(v);
  std::copy(r.begin(), r.end(), s.words().begin());
  return s;
}

VertexSet Graph::closed_neighbors(int v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : rows_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph::Builder::Builder(int n) : g_(n) {}
Graph::Builder::Builder(const Graph& g) : g_(g) {}

void Graph::Builder::check(int u, int v) const {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) {
    throw VertexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) throw MalformedInput("self-loop at vertex " + std::to_string(u));
}

void Graph::Builder::set_bit(int u, int v, bool on) {
  auto& wu = g_.rows_[static_cast<std::size_t>(u) * g_.wpr_ + v / kWordBits];
  auto& wv = g_.rows_[static_cast<std::size_t>(v) * g_.wpr_ + u / kWordBits];
  const std::uint64_t bu = std::uint64_t{1} << (v % kWordBits);
  const std::uint64_t bv = std::uint64_t{1} << (u % kWordBits);
  if (on) {
    wu |= bu;
    wv |= bv;
  } else {
    wu &= ~bu;
    wv &= ~bv;
  }
}

Graph::Builder& Graph::Builder::add_edge(int u, int v) {
  check(u, v);
  set_bit(u, v, true);
  return *this;
}

Graph::Builder& Graph::Builder::remove_edge(int u, int v) {
  check(u, v);
  set_bit(u, v, false);
  return *this;
}

Graph::Builder& Graph::Builder::toggle_edge(int u, int v) {
  check(u, v);
  set_bit(u, v, !g_.adjacent(u, v));
  return *this;
}

Graph::Builder& Graph::Builder::join(const VertexSet& a, const VertexSet& b) {
  check_universe(g_, a);
  check_universe(g_, b);
  a.for_each([&](int u) {
    b.for_each([&](int v) {
      if (u != v) set_bit(u, v, true);
    });
  });
  return *this;
}

Graph seidel_switch(const Graph& g, const VertexSet& a) {
  check_universe(g, a);
  Graph out = g;
  const int wpr = g.wpr_;
  const VertexSet rest = a.complement();
  auto aw = a.words();
  auto rw = rest.words();
  for (int v = 0; v < g.n_; ++v) {
    auto* r = out.rows_.data() + static_cast<std::size_t>(v) * wpr;
    const auto& toggle = a.contains(v) ? rw : aw;
    for (int w = 0; w < wpr; ++w) r[w] ^= toggle[static_cast<std::size_t>(w)];
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph out = g;
  const VertexSet all = VertexSet::full(g.n_);
  auto fw = all.words();
  const int wpr = g.wpr_;
  for (int v = 0; v < g.n_; ++v) {
    auto* r = out.rows_.data() + static_cast<std::size_t>(v) * wpr;
    for (int w = 0; w < wpr; ++w) r[w] = ~r[w] & fw[static_cast<std::size_t>(w)];
    r[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  }
  return out;
}

Graph induced(const Graph& g, const VertexSet& u) {
  check_universe(g, u);
  const std::vector<int> ids = u.to_vector();
  const int k = static_cast<int>(ids.size());
  Graph out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)])) {
        out.rows_[static_cast<std::size_t>(i) * out.wpr_ + j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
        out.rows_[static_cast<std::size_t>(j) * out.wpr_ + i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
      }
    }
  }
  return out;
}

bool is_module(const Graph& g, const VertexSet& m) {
  check_universe(g, m);
  const int first = m.first();
  if (first < 0) return true;
  const VertexSet outside = m.complement();
  const VertexSet reference = g.neighbors(first) & outside;
  bool ok = true;
  m.for_each([&](int v) {
    if (ok && (g.neighbors(v) & outside) != reference) ok = false;
  });
  return ok;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order();
  Graph::Builder b(n + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + n, v + n);
  return b.build();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet grow(g.order());
      frontier.for_each([&](int v) { grow |= g.neighbors(v); });
      frontier = grow - comp;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> co_components(const Graph& g) { return components(complement(g)); }

}  // namespace switchkit
