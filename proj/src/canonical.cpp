#include "switchkit/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

#include "switchkit/errors.hpp"

namespace switchkit {

namespace {

constexpr int kMax = kMaxCanonicalOrder;

void check_canonical_order(const Graph& g) {
  if (g.order() > kMax) {
    throw TooLarge("canonical form needs order <= " + std::to_string(kMax) + ", got " + std::to_string(g.order()));
  }
}

/// Colour refinement to a stable, isomorphism-invariant vertex colouring.
std::vector<int> refine_colors(int n, const std::array<std::uint32_t, kMax>& adj) {
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  int classes = n == 0 ? 0 : 1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.first = color[static_cast<std::size_t>(v)];
      for (int u = 0; u < n; ++u) {
        if ((adj[static_cast<std::size_t>(v)] >> u) & 1U) s.second.push_back(color[static_cast<std::size_t>(u)]);
      }
      std::sort(s.second.begin(), s.second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) - sorted.begin());
    }
    const int next = static_cast<int>(sorted.size());
    if (next == classes) break;
    classes = next;
  }
  return color;
}

class LabelSearch {
 public:
  explicit LabelSearch(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      adj_[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.row_word(v));
    }
    color_ = refine_colors(n_, adj_);
    pos_color_ = color_;
    std::sort(pos_color_.begin(), pos_color_.end());
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        if (u == v || color_[static_cast<std::size_t>(u)] != color_[static_cast<std::size_t>(v)]) continue;
        const std::uint32_t mask = ~((1U << u) | (1U << v));
        if ((adj_[static_cast<std::size_t>(u)] & mask) == (adj_[static_cast<std::size_t>(v)] & mask)) {
          twins_[static_cast<std::size_t>(u)] |= 1U << v;
        }
      }
    }
  }

  void run() { dfs(0); }

  const std::array<int, kMax>& best_perm() const { return best_perm_; }
  const std::array<std::uint32_t, kMax>& best_rows() const { return best_rows_; }

 private:
  /// -1, 0, 1 comparing cur_rows_[0..k) with best_rows_[0..k).
  int compare_prefix(int k) const {
    for (int i = 0; i < k; ++i) {
      if (cur_rows_[static_cast<std::size_t>(i)] != best_rows_[static_cast<std::size_t>(i)]) {
        return cur_rows_[static_cast<std::size_t>(i)] < best_rows_[static_cast<std::size_t>(i)] ? -1 : 1;
      }
    }
    return 0;
  }

  void dfs(int k) {
    if (k == n_) {
      if (!have_best_ || compare_prefix(n_) < 0) {
        best_rows_ = cur_rows_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    const int want = pos_color_[static_cast<std::size_t>(k)];
    std::uint32_t tried = 0;
    for (int v = 0; v < n_; ++v) {
      if (((used_ >> v) & 1U) || color_[static_cast<std::size_t>(v)] != want) continue;
      if ((twins_[static_cast<std::size_t>(v)] & tried) != 0) continue;
      tried |= 1U << v;
      std::uint32_t row = 0;
      for (int j = 0; j < k; ++j) {
        row = (row << 1) | ((adj_[static_cast<std::size_t>(v)] >> perm_[static_cast<std::size_t>(j)]) & 1U);
      }
      if (have_best_) {
        const int c = compare_prefix(k);
        if (c > 0) return;
        if (c == 0 && row > best_rows_[static_cast<std::size_t>(k)]) continue;
      }
      perm_[static_cast<std::size_t>(k)] = v;
      cur_rows_[static_cast<std::size_t>(k)] = row;
      used_ |= 1U << v;
      dfs(k + 1);
      used_ &= ~(1U << v);
    }
  }

  int n_;
  std::array<std::uint32_t, kMax> adj_{};
  std::array<std::uint32_t, kMax> twins_{};
  std::vector<int> color_;
  std::vector<int> pos_color_;
  std::array<int, kMax> perm_{};
  std::array<std::uint32_t, kMax> cur_rows_{};
  std::array<int, kMax> best_perm_{};
  std::array<std::uint32_t, kMax> best_rows_{};
  std::uint32_t used_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  check_canonical_order(g);
  LabelSearch s(g);
  s.run();
  return {s.best_perm().begin(), s.best_perm().begin() + g.order()};
}

CanonicalForm canonical_form(const Graph& g) {
  check_canonical_order(g);
  LabelSearch s(g);
  s.run();
  CanonicalForm f;
  f.bytes.reserve(static_cast<std::size_t>(2 * g.order() + 1));
  f.bytes.push_back(static_cast<char>(g.order()));
  for (int k = 1; k < g.order(); ++k) {
    const std::uint32_t r = s.best_rows()[static_cast<std::size_t>(k)];
    f.bytes.push_back(static_cast<char>((r >> 8) & 0xFF));
    f.bytes.push_back(static_cast<char>(r & 0xFF));
  }
  return f;
}

Graph canonical_graph(const Graph& g) {
  const auto perm = canonical_labeling(g);
  const int n = g.order();
  Graph::Builder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) b.add_edge(i, j);
    }
  }
  return b.build();
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::vector<CanonicalForm> switching_class_forms(const Graph& g) {
  check_canonical_order(g);
  const int n = g.order();
  std::set<CanonicalForm> forms;
  const std::uint64_t count = n == 0 ? 1 : (std::uint64_t{1} << (n - 1));
  for (std::uint64_t m = 0; m < count; ++m) {
    forms.insert(canonical_form(seidel_switch(g, VertexSet::from_mask(n, m << 1))));
  }
  return {forms.begin(), forms.end()};
}

std::vector<Graph> switching_class(const Graph& g) {
  check_canonical_order(g);
  const int n = g.order();
  std::map<CanonicalForm, Graph> reps;
  const std::uint64_t count = n == 0 ? 1 : (std::uint64_t{1} << (n - 1));
  for (std::uint64_t m = 0; m < count; ++m) {
    Graph s = seidel_switch(g, VertexSet::from_mask(n, m << 1));
    auto f = canonical_form(s);
    if (!reps.contains(f)) reps.emplace(std::move(f), canonical_graph(s));
  }
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [f, h] : reps) out.push_back(std::move(h));
  return out;
}

CanonicalForm switching_class_key(const Graph& g) { return switching_class_forms(g).front(); }

bool are_switching_equivalent(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) {
    throw SizeMismatch("switching equivalence needs equal orders, got " + std::to_string(g.order()) + " and " +
                       std::to_string(h.order()));
  }
  check_canonical_order(h);
  const auto forms = switching_class_forms(g);
  return std::binary_search(forms.begin(), forms.end(), canonical_form(h));
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0) throw SizeMismatch("negative order");
  if (n > kMax) throw TooLarge("graph enumeration needs order <= " + std::to_string(kMax));
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Graph> out;
  if (n == 0) {
    out.emplace_back(0);
  } else {
    const auto smaller = all_graphs(n - 1);
    std::map<CanonicalForm, Graph> seen;
    for (const Graph& h : smaller) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
        Graph::Builder b(n);
        for (auto [u, v] : h.edges()) b.add_edge(u, v);
        for (int u = 0; u < n - 1; ++u) {
          if ((m >> u) & 1U) b.add_edge(u, n - 1);
        }
        Graph ext = b.build();
        auto f = canonical_form(ext);
        if (!seen.contains(f)) seen.emplace(std::move(f), canonical_graph(ext));
      }
    }
    for (auto& [f, h] : seen) out.push_back(std::move(h));
  }
  std::lock_guard lock(mu);
  cache.emplace(n, out);
  return out;
}

}  // namespace switchkit
