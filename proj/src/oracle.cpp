#include "switchkit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "switchkit/errors.hpp"

namespace switchkit {

namespace {

void check_oracle_order(const Graph& g) {
  if (g.order() > kMaxOracleOrder) {
    throw TooLarge("brute-force oracle needs order <= " + std::to_string(kMaxOracleOrder) + ", got " +
                   std::to_string(g.order()));
  }
}

/// Masks over vertices 1..n-1 with k bits set, ascending.
std::vector<std::uint32_t> level_masks(int bits, int k) {
  std::vector<std::uint32_t> out;
  if (k > bits) return out;
  if (k == 0) return {0};
  std::uint32_t m = (1U << k) - 1;
  const std::uint32_t limit = 1U << bits;
  while (m < limit) {
    out.push_back(m);
    const std::uint32_t c = m & (~m + 1);
    const std::uint32_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

VertexSet set_of(int n, std::uint32_t mask) { return VertexSet::from_mask(n, std::uint64_t{mask} << 1); }

/// Least index i in masks with hit(i), or masks.size().
std::size_t first_hit(const Graph& g, const std::vector<std::uint32_t>& masks, const GraphPredicate& pred,
                      int threads) {
  const int n = g.order();
  auto hit = [&](std::size_t i) { return pred(seidel_switch(g, set_of(n, masks[i]))); };
  if (threads <= 1 || masks.size() < 64) {
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (hit(i)) return i;
    }
    return masks.size();
  }
  std::atomic<std::size_t> best{masks.size()};
  const std::size_t chunk = (masks.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    const std::size_t lo = static_cast<std::size_t>(t) * chunk;
    const std::size_t hi = std::min(masks.size(), lo + chunk);
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi && i < best.load(); ++i) {
        if (hit(i)) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  return best.load();
}

}  // namespace

std::optional<VertexSet> oracle_upper(const Graph& g, const GraphPredicate& pred, OracleOptions opts) {
  check_oracle_order(g);
  const int n = g.order();
  if (n == 0) return pred(g) ? std::optional<VertexSet>(VertexSet(0)) : std::nullopt;
  for (int k = 0; k <= n - 1; ++k) {
    const auto masks = level_masks(n - 1, k);
    const std::size_t i = first_hit(g, masks, pred, opts.threads);
    if (i < masks.size()) return set_of(n, masks[i]);
  }
  return std::nullopt;
}

bool oracle_lower(const Graph& g, const GraphPredicate& pred, OracleOptions opts) {
  auto negated = [&](const Graph& h) { return !pred(h); };
  return !oracle_upper(g, negated, opts).has_value();
}

std::vector<VertexSet> oracle_upper_all(const Graph& g, const GraphPredicate& pred) {
  check_oracle_order(g);
  const int n = g.order();
  std::vector<VertexSet> out;
  if (n == 0) {
    if (pred(g)) out.emplace_back(0);
    return out;
  }
  for (int k = 0; k <= n - 1; ++k) {
    for (std::uint32_t m : level_masks(n - 1, k)) {
      VertexSet a = set_of(n, m);
      if (pred(seidel_switch(g, a))) out.push_back(std::move(a));
    }
  }
  return out;
}

VertexSet normalize_switching_set(const VertexSet& a) {
  if (a.universe() > 0 && a.contains(0)) return a.complement();
  return a;
}

}  // namespace switchkit
