#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace ctrwqo {

using VertexId = int;

/// Maximum number of vertices a graph may hold (one machine word per row).
inline constexpr int kMaxVertices = 64;

/// A set of vertex ids in [0, 64), stored as a single word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<VertexId> vs) {
    for (VertexId v : vs) insert(v);
  }

  static constexpr VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }
  /// Smallest member; undefined on the empty set.
  constexpr VertexId front() const { return std::countr_zero(bits_); }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = VertexId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr VertexId operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<VertexId> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace ctrwqo
