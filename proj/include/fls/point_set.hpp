#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace fls {

/// Index of a point within its space.
struct PointId {
  std::size_t index = 0;
  friend constexpr auto operator<=>(PointId, PointId) = default;
};

inline constexpr std::size_t kMaxPoints = 64;

/// Subset of the points of a space, as a bitmask (spaces hold at most 64 points).
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet all(std::size_t count) {
    return PointSet(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
  }
  static PointSet of(std::initializer_list<std::size_t> indices) {
    PointSet s;
    for (auto i : indices) s.insert(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(PointSet, PointSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Calls f(subset) for every subset of `set`, including the empty set and `set` itself.
template <typename F>
void for_each_subset(PointSet set, F&& f) {
  const std::uint64_t full = set.bits();
  std::uint64_t sub = 0;
  do {
    f(PointSet(sub));
    sub = (sub - full) & full;
  } while (sub != 0);
}

}  // namespace fls
