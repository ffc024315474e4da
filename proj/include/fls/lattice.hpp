#pragma once

// Finite chain lattice L_n = {0 < a1 < ... < an < 1}.
//
// Elements are stored by rank: 0 is the bottom (theta), n + 1 is the top.
// Because the order is total, meet is min and join is max, so a meet of any
// number of values is nonzero exactly when every operand is nonzero.

#include <charconv>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fls/errors.hpp"

namespace fls {

class ChainLattice {
 public:
  constexpr ChainLattice() = default;
  constexpr explicit ChainLattice(unsigned intermediates) : n_(intermediates) {}

  /// Number of intermediate elements a1..an.
  constexpr unsigned n() const { return n_; }
  constexpr unsigned size() const { return n_ + 2; }
  constexpr unsigned nonzero_count() const { return n_ + 1; }
  constexpr unsigned top_rank() const { return n_ + 1; }
  constexpr bool is_crisp() const { return n_ == 0; }

  friend constexpr bool operator==(ChainLattice, ChainLattice) = default;

 private:
  unsigned n_ = 0;
};

class LatticeElement {
 public:
  constexpr LatticeElement() = default;

  /// Throws std::out_of_range when rank > lat.n() + 1.
  constexpr LatticeElement(unsigned rank, ChainLattice lat) : rank_(rank), lattice_(lat) {
    if (rank > lat.top_rank()) {
      throw std::out_of_range("lattice rank " + std::to_string(rank) + " outside L_" +
                              std::to_string(lat.n()));
    }
  }

  static constexpr LatticeElement bottom(ChainLattice lat) { return {0, lat}; }
  static constexpr LatticeElement top(ChainLattice lat) { return {lat.top_rank(), lat}; }

  constexpr unsigned rank() const { return rank_; }
  constexpr ChainLattice lattice() const { return lattice_; }
  constexpr bool is_zero() const { return rank_ == 0; }
  constexpr bool is_top() const { return rank_ == lattice_.top_rank(); }

  friend constexpr bool operator==(const LatticeElement&, const LatticeElement&) = default;

 private:
  unsigned rank_ = 0;
  ChainLattice lattice_{};
};

namespace detail {

inline void require_same_lattice(const LatticeElement& a, const LatticeElement& b) {
  if (a.lattice() != b.lattice()) {
    throw std::invalid_argument("lattice operands from L_" + std::to_string(a.lattice().n()) +
                                " and L_" + std::to_string(b.lattice().n()));
  }
}

}  // namespace detail

inline LatticeElement meet(const LatticeElement& a, const LatticeElement& b) {
  detail::require_same_lattice(a, b);
  return a.rank() <= b.rank() ? a : b;
}

inline LatticeElement join(const LatticeElement& a, const LatticeElement& b) {
  detail::require_same_lattice(a, b);
  return a.rank() >= b.rank() ? a : b;
}

/// Token for a rank: "0", "1", or "a<i>".
inline std::string format_token(unsigned rank, ChainLattice lat) {
  if (rank == 0) return "0";
  if (rank == lat.top_rank()) return "1";
  if (rank > lat.top_rank()) throw std::out_of_range("rank outside lattice");
  return "a" + std::to_string(rank);
}

inline std::string format_token(const LatticeElement& e) { return format_token(e.rank(), e.lattice()); }

/// Accepts exactly `0 | 1 | a<positive integer>` with index <= n.
inline LatticeElement parse_token(std::string_view s, ChainLattice lat) {
  if (s == "0") return LatticeElement::bottom(lat);
  if (s == "1") return LatticeElement::top(lat);
  if (s.size() >= 2 && s.front() == 'a' && s[1] != '0') {
    unsigned index = 0;
    const char* first = s.data() + 1;
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec == std::errc{} && ptr == last && index >= 1 && index <= lat.n()) {
      return LatticeElement(index, lat);
    }
  }
  throw ParseError("unknown lattice token '" + std::string(s) + "' for L_" + std::to_string(lat.n()));
}

}  // namespace fls
