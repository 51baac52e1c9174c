#include <string>

#include "switchkit/errors.hpp"
#include "switchkit/lower.hpp"

namespace switchkit {

namespace {

constexpr int kMaxMinorHost = 8;

class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& h) : g_(g), h_(h), label_(static_cast<std::size_t>(g.order()), -1) {}

  bool run() { return assign(0); }

 private:
  /// label_[v] is the branch set of v, or -1 when v is deleted.
  bool assign(int v) {
    if (v == g_.order()) return is_model();
    for (int b = -1; b < h_.order(); ++b) {
      label_[static_cast<std::size_t>(v)] = b;
      if (assign(v + 1)) return true;
    }
    return false;
  }

  bool is_model() const {
    const int n = g_.order();
    const int k = h_.order();
    std::vector<VertexSet> branch(static_cast<std::size_t>(k), VertexSet(n));
    for (int v = 0; v < n; ++v) {
      if (label_[static_cast<std::size_t>(v)] >= 0) branch[static_cast<std::size_t>(label_[static_cast<std::size_t>(v)])].insert(v);
    }
    for (const auto& b : branch) {
      if (b.empty() || components(induced(g_, b)).size() != 1) return false;
    }
    for (auto [a, c] : h_.edges()) {
      bool linked = false;
      branch[static_cast<std::size_t>(a)].for_each([&](int v) {
        if (!linked && g_.neighbors(v).intersects(branch[static_cast<std::size_t>(c)])) linked = true;
      });
      if (!linked) return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> label_;
};

}  // namespace

bool has_minor(const Graph& g, const Graph& h) {
  if (g.order() > kMaxMinorHost) {
    throw TooLarge("minor test needs host order <= " + std::to_string(kMaxMinorHost) + ", got " +
                   std::to_string(g.order()));
  }
  if (h.order() > g.order() || h.edge_count() > g.edge_count()) return false;
  MinorSearch s(g, h);
  return s.run();
}

}  // namespace switchkit
