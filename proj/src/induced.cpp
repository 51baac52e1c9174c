#include "switchkit/induced.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "switchkit/canonical.hpp"
#include "switchkit/errors.hpp"

namespace switchkit {

namespace {

using Words = std::vector<std::uint64_t>;

Words full_words(int n) {
  const VertexSet f = VertexSet::full(n);
  return {f.words().begin(), f.words().end()};
}

bool any_bit(const Words& w) {
  return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
}

bool has_bit(const Words& w, int v) { return (w[static_cast<std::size_t>(v / kWordBits)] >> (v % kWordBits)) & 1U; }

class InducedMatcher {
 public:
  InducedMatcher(const Graph& g, const Graph& h) : g_(g), h_(h), wpr_(g.words_per_row()) {
    const int k = h.order();
    // Place the densest vertex first, then always the one with most placed neighbours.
    std::vector<bool> placed(static_cast<std::size_t>(k), false);
    for (int step = 0; step < k; ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < k; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = 0;
        for (int u : order_) links += h.adjacent(u, v) ? 1 : 0;
        if (links > best_links || (links == best_links && h.degree(v) > h.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
    }
    all_ = full_words(g.order());
    for (int v = 0; v < g.order(); ++v) {
      const int d = g.degree(v);
      gdeg_.push_back(d);
    }
    image_.assign(static_cast<std::size_t>(k), -1);
  }

  std::optional<std::vector<int>> run() {
    if (h_.order() > g_.order()) return std::nullopt;
    used_.assign(static_cast<std::size_t>(wpr_), 0);
    if (dfs(0)) return image_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int hv = order_[depth];
    const int hdeg = h_.degree(hv);
    const int hco = h_.order() - 1 - hdeg;
    Words cand(static_cast<std::size_t>(wpr_));
    for (int w = 0; w < wpr_; ++w) cand[static_cast<std::size_t>(w)] = all_[static_cast<std::size_t>(w)] & ~used_[static_cast<std::size_t>(w)];
    for (std::size_t j = 0; j < depth; ++j) {
      const int hu = order_[j];
      auto r = g_.row(image_[static_cast<std::size_t>(hu)]);
      if (h_.adjacent(hu, hv)) {
        for (int w = 0; w < wpr_; ++w) cand[static_cast<std::size_t>(w)] &= r[static_cast<std::size_t>(w)];
      } else {
        for (int w = 0; w < wpr_; ++w) cand[static_cast<std::size_t>(w)] &= ~r[static_cast<std::size_t>(w)];
      }
    }
    for (int w = 0; w < wpr_; ++w) {
      std::uint64_t bits = cand[static_cast<std::size_t>(w)];
      while (bits != 0) {
        const int v = w * kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        if (gdeg_[static_cast<std::size_t>(v)] < hdeg || g_.order() - 1 - gdeg_[static_cast<std::size_t>(v)] < hco) {
          continue;
        }
        image_[static_cast<std::size_t>(hv)] = v;
        used_[static_cast<std::size_t>(w)] |= std::uint64_t{1} << (v % kWordBits);
        if (dfs(depth + 1)) return true;
        used_[static_cast<std::size_t>(w)] &= ~(std::uint64_t{1} << (v % kWordBits));
      }
    }
    image_[static_cast<std::size_t>(hv)] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  int wpr_;
  std::vector<int> order_;
  std::vector<int> gdeg_;
  std::vector<int> image_;
  Words all_;
  Words used_;
};

/// Shared state of the path and cycle searches.
class ChainSearch {
 public:
  ChainSearch(const Graph& g, int k, SearchBudget budget) : g_(g), k_(k), wpr_(g.words_per_row()), budget_(budget) {
    by_degree_.resize(static_cast<std::size_t>(g.order()));
    std::iota(by_degree_.begin(), by_degree_.end(), 0);
    std::stable_sort(by_degree_.begin(), by_degree_.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  }

  std::optional<std::vector<int>> path() {
    const int n = g_.order();
    if (k_ <= 0 || k_ > n) return std::nullopt;
    forbid_.assign(static_cast<std::size_t>(k_ + 1), Words(static_cast<std::size_t>(wpr_), 0));
    for (int s : by_degree_) {
      tick();
      chain_.assign(1, s);
      if (k_ == 1) return chain_;
      std::fill(forbid_[1].begin(), forbid_[1].end(), 0);
      if (extend_path(1)) return chain_;
    }
    return std::nullopt;
  }

  std::optional<std::vector<int>> cycle() {
    const int n = g_.order();
    if (k_ < 3 || k_ > n) return std::nullopt;
    forbid_.assign(static_cast<std::size_t>(k_ + 1), Words(static_cast<std::size_t>(wpr_), 0));
    for (int s = 0; s < n; ++s) {
      tick();
      root_ = s;
      above_.assign(static_cast<std::size_t>(wpr_), 0);
      for (int v = s + 1; v < n; ++v) above_[static_cast<std::size_t>(v / kWordBits)] |= std::uint64_t{1} << (v % kWordBits);
      chain_.assign(1, s);
      // forbid_[t] holds {p0} and N[p1..p(t-1)].
      auto& f = forbid_[1];
      std::fill(f.begin(), f.end(), 0);
      f[static_cast<std::size_t>(s / kWordBits)] |= std::uint64_t{1} << (s % kWordBits);
      Words cand(static_cast<std::size_t>(wpr_));
      auto r = g_.row(s);
      for (int w = 0; w < wpr_; ++w) cand[static_cast<std::size_t>(w)] = r[static_cast<std::size_t>(w)] & above_[static_cast<std::size_t>(w)];
      for (int v : by_degree_) {
        if (!has_bit(cand, v)) continue;
        chain_.push_back(v);
        if (extend_cycle(1)) return chain_;
        chain_.pop_back();
      }
    }
    return std::nullopt;
  }

 private:
  void tick() {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetExceeded("induced search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    }
  }

  /// chain_ holds p0..p(t-1); forbid_[t] = N[p0..p(t-2)].
  bool extend_path(int t) {
    tick();
    const int pt = chain_.back();
    Words cand(static_cast<std::size_t>(wpr_));
    auto r = g_.row(pt);
    const auto& f = forbid_[static_cast<std::size_t>(t)];
    for (int w = 0; w < wpr_; ++w) cand[static_cast<std::size_t>(w)] = r[static_cast<std::size_t>(w)] & ~f[static_cast<std::size_t>(w)];
    if (!any_bit(cand)) return false;
    const bool last = t == k_ - 1;
    for (int v : by_degree_) {
      if (!has_bit(cand, v)) continue;
      if (last) {
        if (v < chain_.front()) continue;
        chain_.push_back(v);
        return true;
      }
      auto& nf = forbid_[static_cast<std::size_t>(t + 1)];
      for (int w = 0; w < wpr_; ++w) nf[static_cast<std::size_t>(w)] = f[static_cast<std::size_t>(w)] | r[static_cast<std::size_t>(w)];
      nf[static_cast<std::size_t>(pt / kWordBits)] |= std::uint64_t{1} << (pt % kWordBits);
      chain_.push_back(v);
      if (extend_path(t + 1)) return true;
      chain_.pop_back();
    }
    return false;
  }

  /// chain_ holds p0..pt, t >= 1.
  bool extend_cycle(int t) {
    tick();
    const int pt = chain_.back();
    // forbid_[t] = {p0} | N[p1..p(t-1)]
    auto& f = forbid_[static_cast<std::size_t>(t)];
    if (t == 1) {
      std::fill(f.begin(), f.end(), 0);
      f[static_cast<std::size_t>(root_ / kWordBits)] |= std::uint64_t{1} << (root_ % kWordBits);
    }
    Words cand(static_cast<std::size_t>(wpr_));
    auto r = g_.row(pt);
    auto r0 = g_.row(root_);
    const bool last = t + 1 == k_ - 1;
    for (int w = 0; w < wpr_; ++w) {
      const auto uw = static_cast<std::size_t>(w);
      std::uint64_t c = r[uw] & ~f[uw] & above_[uw];
      c &= last ? r0[uw] : ~r0[uw];
      cand[uw] = c;
    }
    if (!any_bit(cand)) return false;
    for (int v : by_degree_) {
      if (!has_bit(cand, v)) continue;
      if (last) {
        if (v < chain_[1]) continue;
        chain_.push_back(v);
        return true;
      }
      auto& nf = forbid_[static_cast<std::size_t>(t + 1)];
      for (int w = 0; w < wpr_; ++w) nf[static_cast<std::size_t>(w)] = f[static_cast<std::size_t>(w)] | r[static_cast<std::size_t>(w)];
      nf[static_cast<std::size_t>(pt / kWordBits)] |= std::uint64_t{1} << (pt % kWordBits);
      chain_.push_back(v);
      if (extend_cycle(t + 1)) return true;
      chain_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int k_;
  int wpr_;
  SearchBudget budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> by_degree_;
  std::vector<int> chain_;
  std::vector<Words> forbid_;
  Words above_;
  int root_ = 0;
};

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h) {
  if (h.order() == 0) return std::vector<int>{};
  if (h.order() > g.order() || h.edge_count() > g.edge_count()) return std::nullopt;
  InducedMatcher m(g, h);
  return m.run();
}

bool is_family_free(const Graph& g, const PatternFamily& family) { return !first_family_member(g, family).has_value(); }

std::optional<std::size_t> first_family_member(const Graph& g, const PatternFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (contains_induced(g, family[i])) return i;
  }
  return std::nullopt;
}

PatternFamily expand_switch_family(const PatternFamily& family) {
  std::map<CanonicalForm, Graph> all;
  for (const Graph& h : family) {
    for (Graph& s : switching_class(h)) {
      auto f = canonical_form(s);
      all.emplace(std::move(f), std::move(s));
    }
  }
  PatternFamily out;
  out.reserve(all.size());
  for (auto& [f, h] : all) out.push_back(std::move(h));
  return out;
}

std::optional<std::vector<int>> find_induced_path(const Graph& g, int k, SearchBudget budget) {
  ChainSearch s(g, k, budget);
  return s.path();
}

std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int k, SearchBudget budget) {
  ChainSearch s(g, k, budget);
  return s.cycle();
}

}  // namespace switchkit
