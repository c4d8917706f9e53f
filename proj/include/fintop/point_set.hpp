#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace fintop {

using PointIndex = std::size_t;

/// A subset of the points of a finite space, stored as a 64-bit mask over
/// point indices. Spaces are limited to 64 points.
class PointSet {
 public:
  static constexpr std::size_t max_points = 64;

  constexpr PointSet() = default;

  static constexpr PointSet from_bits(std::uint64_t bits) { return PointSet(bits); }

  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= max_points ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static constexpr PointSet singleton(PointIndex i) { return PointSet(std::uint64_t{1} << i); }

  static constexpr PointSet of(std::initializer_list<PointIndex> members) {
    PointSet s;
    for (auto i : members) s.insert(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(PointIndex i) const { return (bits_ >> i) & 1U; }

  constexpr void insert(PointIndex i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(PointIndex i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(PointSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

  /// Complement relative to the first `n` points.
  constexpr PointSet complement(std::size_t n) const { return PointSet(~bits_ & full(n).bits_); }

  /// Lowest member; undefined on the empty set.
  constexpr PointIndex first() const { return static_cast<PointIndex>(std::countr_zero(bits_)); }

  std::vector<PointIndex> indices() const {
    std::vector<PointIndex> out;
    out.reserve(size());
    for_each([&](PointIndex i) { out.push_back(i); });
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<PointIndex>(std::countr_zero(b)));
  }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.bits_ & ~b.bits_); }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }
  constexpr PointSet& operator-=(PointSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(PointSet, PointSet) = default;

 private:
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Canonical order: ascending cardinality, then lexicographic on the sorted
/// index lists.
constexpr bool canonical_less(PointSet a, PointSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Equal cardinality: the first differing index decides; the set holding the
  // smaller index comes first.
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.bits() & lowest) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(PointSet a, PointSet b) const { return canonical_less(a, b); }
};

struct PointSetHash {
  std::size_t operator()(PointSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace fintop
