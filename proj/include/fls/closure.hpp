#pragma once

// Closure <X> of a point set.
//
// The defining condition "for x_1..x_k in X there is a line d with
// d(x_1) ^ ... ^ d(x_k) ^ d(x) != 0" admits two quantifier readings:
//
//   kExistsSubset:  some T of X with |T| >= 2 and some d have T + {x} on d.
//   kForallSubsets: every T of X with |T| >= 2 has such a d.
//
// For |X| <= 1 both readings return X unchanged.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "fls/space.hpp"

namespace fls {

enum class ClosureMode { kExistsSubset, kForallSubsets };

namespace detail {

inline void require_subset(const FuzzyLinearSpace& space, PointSet x) {
  if (!x.subset_of(space.all_points())) throw std::invalid_argument("closure argument is not a subset of N");
}

}  // namespace detail

inline PointSet closure(const FuzzyLinearSpace& space, PointSet x, ClosureMode mode = ClosureMode::kExistsSubset) {
  detail::require_subset(space, x);
  if (x.size() <= 1) return x;
  PointSet out;
  for (const auto s : space.supports()) {
    const bool hit = mode == ClosureMode::kExistsSubset ? (s & x).size() >= 2 : x.subset_of(s);
    if (hit) out = out | s;
  }
  return out;
}

/// True when <x> = target.
inline bool generates(const FuzzyLinearSpace& space, PointSet x, PointSet target,
                      ClosureMode mode = ClosureMode::kExistsSubset) {
  return closure(space, x, mode) == target;
}

/// Literal evaluation of the closure condition: every subset T of X with
/// |T| >= 2 is visited and the meet of d over T + {x} is computed value by
/// value with the lattice meet. Meant as a cross-check for closure().
inline PointSet closure_oracle(const FuzzyLinearSpace& space, PointSet x, ClosureMode mode = ClosureMode::kExistsSubset,
                               std::size_t max_subset_bits = 16) {
  detail::require_subset(space, x);
  if (x.size() > max_subset_bits) {
    throw ResourceLimit("closure oracle limited to |X| <= " + std::to_string(max_subset_bits) + ", got " +
                        std::to_string(x.size()));
  }
  if (x.size() <= 1) return x;

  auto witnessed = [&](PointSet t, std::size_t p) {
    for (const auto& d : space.lines()) {
      LatticeElement m = d.values[p];
      for (auto i : t.indices()) m = meet(m, d.values[i]);
      if (!m.is_zero()) return true;
    }
    return false;
  };

  PointSet out;
  for (std::size_t p = 0; p < space.point_count(); ++p) {
    bool any = false;
    bool all = true;
    for_each_subset(x, [&](PointSet t) {
      if (t.size() < 2) return;
      if (witnessed(t, p)) {
        any = true;
      } else {
        all = false;
      }
    });
    const bool in = mode == ClosureMode::kExistsSubset ? any : all;
    if (in) out.insert(p);
  }
  return out;
}

}  // namespace fls
