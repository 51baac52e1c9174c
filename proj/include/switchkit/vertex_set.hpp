#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace switchkit {

inline constexpr int kWordBits = 64;

inline constexpr int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

/// A subset of {0, ..., universe-1} stored as 64-bit words.
///
/// Bits at or above `universe` are always zero. Binary set operators require
/// both operands to share the same universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet full(int universe);
  static VertexSet of(int universe, std::initializer_list<int> members);
  static VertexSet of(int universe, std::span<const int> members);
  /// Low `universe` bits of `mask` (universe <= 64).
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  bool contains(int v) const {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(int v) { words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits); }
  void erase(int v) { words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits)); }
  void flip(int v) { words_[v / kWordBits] ^= std::uint64_t{1} << (v % kWordBits); }

  int count() const;
  bool empty() const;
  /// Smallest member, or -1.
  int first() const;
  /// Smallest member greater than v, or -1.
  int next(int v) const;

  std::vector<int> to_vector() const;
  /// "0,2,5"
  std::string to_string() const;

  /// Members mapped through `ids` (ids[i] is the vertex of member i).
  VertexSet lift(int universe, std::span<const int> ids) const;

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator^=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Order by size, then by the member sequence read as a binary number with
  /// vertex 0 least significant. This is the enumeration order of the oracles.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<int>(w) * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_same_universe(const VertexSet& o) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace switchkit
