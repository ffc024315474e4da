#pragma once

// Exact labeling counts.
//
// A line with a support of size k admits (n + 1)^k nonzero labelings over
// L_n, and a family of supports v_1..v_k admits prod (n + 1)^{v_j}. These
// count labelings of a fixed incidence skeleton; they are not counts of
// points or lines of one space. All arithmetic is exact.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fls/errors.hpp"
#include "fls/space.hpp"

namespace fls {

using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& c) { return c.str(); }

inline Count parse_count(std::string_view s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("not a nonnegative decimal integer: '" + std::string(s) + "'");
  }
  return Count(std::string(s));
}

/// Raised when m is not (n + 1)^{b v} for an integer b.
class NoExactSolution : public std::runtime_error {
 public:
  NoExactSolution(const std::string& what, std::optional<unsigned> lower, std::optional<unsigned> upper)
      : std::runtime_error(what), lower_exponent(lower), upper_exponent(upper) {}

  /// Nearest exponents bracketing the failed solve (of the power, or of |D|).
  std::optional<unsigned> lower_exponent;
  std::optional<unsigned> upper_exponent;
};

inline Count pow_count(unsigned base, std::size_t exponent) {
  return boost::multiprecision::pow(Count(base), static_cast<unsigned>(exponent));
}

/// Nonzero labelings of one k-point support: (n + 1)^k.
inline Count count_k_fuzzy_line_labelings(std::size_t k, ChainLattice lat) {
  return pow_count(lat.nonzero_count(), k);
}

/// Configurations of supports of sizes v_1..v_k: prod_j (n + 1)^{v_j}.
inline Count count_k_fuzzy_point_configs(std::span<const std::size_t> support_sizes, ChainLattice lat) {
  Count out = 1;
  for (auto vj : support_sizes) out *= count_k_fuzzy_line_labelings(vj, lat);
  return out;
}

inline std::vector<std::size_t> support_sizes(const FuzzyLinearSpace& space) {
  std::vector<std::size_t> out;
  out.reserve(space.line_count());
  for (auto s : space.supports()) out.push_back(s.size());
  return out;
}

/// Number of nonzero relabelings of the space's incidence skeleton.
inline Count space_cardinality(const FuzzyLinearSpace& space) {
  const auto sizes = support_sizes(space);
  return count_k_fuzzy_point_configs(sizes, space.lattice());
}

/// Solves (n + 1)^{b * v} = m for the integer line count b, exactly.
inline std::size_t infer_line_count(const Count& m, std::size_t v, ChainLattice lat) {
  if (lat.n() < 1) throw std::invalid_argument("line-count inference needs n >= 1");
  if (v < 1) throw std::invalid_argument("line-count inference needs support size v >= 1");
  if (m < 1) throw NoExactSolution("m = " + to_decimal(m) + " is not a power of " + std::to_string(lat.nonzero_count()),
                                   std::nullopt, 0u);

  const Count base = lat.nonzero_count();
  unsigned exponent = 0;
  Count power = 1;
  while (power < m) {
    power *= base;
    ++exponent;
  }
  if (power != m) {
    throw NoExactSolution("m = " + to_decimal(m) + " is not a power of " + base.str() + " (between exponents " +
                              std::to_string(exponent - 1) + " and " + std::to_string(exponent) + ")",
                          exponent - 1, exponent);
  }
  if (exponent % v != 0) {
    const auto lo = static_cast<unsigned>(exponent / v);
    throw NoExactSolution("exponent " + std::to_string(exponent) + " is not divisible by v = " + std::to_string(v) +
                              " (nearest line counts " + std::to_string(lo) + " and " + std::to_string(lo + 1) + ")",
                          lo, lo + 1);
  }
  return exponent / v;
}

/// Line count of a space from its own cardinality. Requires a uniform support
/// size; anything else has no single v to divide by.
inline std::size_t infer_line_count(const FuzzyLinearSpace& space) {
  const auto sizes = support_sizes(space);
  if (sizes.empty()) return infer_line_count(Count(1), 1, space.lattice());
  for (auto s : sizes) {
    if (s != sizes.front()) {
      throw NoExactSolution("support sizes are not uniform; no single v_j solves the line count", std::nullopt,
                            std::nullopt);
    }
  }
  return infer_line_count(space_cardinality(space), sizes.front(), space.lattice());
}

/// Enumerates every assignment of a nonzero value to every support position
/// and counts them. Independent of the closed forms above.
inline Count labeling_oracle(std::span<const std::size_t> support_sizes, ChainLattice lat, std::size_t bound = 24) {
  std::size_t positions = 0;
  for (auto s : support_sizes) positions += s;
  if (positions > bound) {
    throw ResourceLimit("labeling oracle limited to " + std::to_string(bound) + " positions, got " +
                        std::to_string(positions));
  }
  const auto top = static_cast<std::uint8_t>(lat.top_rank());
  std::vector<std::uint8_t> ranks(positions, 1);
  std::uint64_t count = 0;
  for (;;) {
    ++count;
    std::size_t i = positions;
    while (i > 0) {
      --i;
      if (ranks[i] < top) {
        ++ranks[i];
        break;
      }
      ranks[i] = 1;
      if (i == 0) return Count(count);
    }
    if (positions == 0) return Count(count);
  }
}

inline Count labeling_oracle(const std::vector<PointSet>& supports, ChainLattice lat, std::size_t bound = 24) {
  std::vector<std::size_t> sizes;
  for (auto s : supports) sizes.push_back(s.size());
  return labeling_oracle(sizes, lat, bound);
}

}  // namespace fls
