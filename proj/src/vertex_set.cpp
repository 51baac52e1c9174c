#include "switchkit/vertex_set.hpp"

#include <algorithm>

#include "switchkit/errors.hpp"

namespace switchkit {

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>(words_for(universe)), 0) {
  if (universe < 0) throw SizeMismatch("negative universe");
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % kWordBits != 0) {
    s.words_.back() = (std::uint64_t{1} << (universe % kWordBits)) - 1;
  }
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  return of(universe, std::span<const int>(members.begin(), members.size()));
}

VertexSet VertexSet::of(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int v : members) {
    if (v < 0 || v >= universe) throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  VertexSet s(universe);
  if (universe > 0) {
    if (universe < kWordBits) mask &= (std::uint64_t{1} << universe) - 1;
    s.words_[0] = mask;
  }
  return s;
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
  }
  return -1;
}

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(start / kWordBits);
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start % kWordBits));
  while (true) {
    if (bits != 0) return static_cast<int>(w) * kWordBits + std::countr_zero(bits);
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out;
  for_each([&](int v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

VertexSet VertexSet::lift(int universe, std::span<const int> ids) const {
  VertexSet out(universe);
  for_each([&](int v) { out.insert(ids[static_cast<std::size_t>(v)]); });
  return out;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  const int ca = a.count();
  const int cb = b.count();
  if (ca != cb) return ca < cb;
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = n; i-- > 0;) {
    const std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
    const std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
    if (wa != wb) return wa < wb;
  }
  return a.universe_ < b.universe_;
}

void VertexSet::check_same_universe(const VertexSet& o) const {
  if (o.universe_ != universe_) {
    throw SizeMismatch("vertex sets over universes " + std::to_string(universe_) + " and " +
                       std::to_string(o.universe_));
  }
}

}  // namespace switchkit
