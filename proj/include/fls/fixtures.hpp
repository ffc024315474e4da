#pragma once

// Small named spaces used throughout the tests and shipped as JSON under fixtures/.

#include <cstddef>
#include <string>
#include <vector>

#include "fls/space.hpp"

namespace fls::fixtures {

/// N = {x, y, z}, d1 = (1,1,0), d2 = (0,1,1), d3 = (1,0,1) over L_0.
inline FuzzyLinearSpace xyz_triangle() {
  const ChainLattice lat{0};
  return FuzzyLinearSpace({"x", "y", "z"}, lat,
                          {make_line("d1", {1, 1, 0}, lat), make_line("d2", {0, 1, 1}, lat),
                           make_line("d3", {1, 0, 1}, lat)});
}

/// The same supports relabeled over L_1: d1 = (a1,1,0), d2 = (0,a1,1), d3 = (1,0,a1).
inline FuzzyLinearSpace xyz_triangle_l1() {
  const ChainLattice lat{1};
  return FuzzyLinearSpace({"x", "y", "z"}, lat,
                          {make_line("d1", {1, 2, 0}, lat), make_line("d2", {0, 1, 2}, lat),
                           make_line("d3", {2, 0, 1}, lat)});
}

inline FuzzyLinearSpace triangle() {
  return crisp_space(3, {PointSet::of({0, 1}), PointSet::of({0, 2}), PointSet::of({1, 2})});
}

/// One line through points 1..v-1, plus {i, v} for each i < v.
inline FuzzyLinearSpace near_pencil(std::size_t v) {
  std::vector<PointSet> lines{PointSet::all(v - 1)};
  for (std::size_t i = 0; i + 1 < v; ++i) lines.push_back(PointSet::of({i, v - 1}));
  return crisp_space(v, lines);
}

/// Every pair of points is a line, in lexicographic order.
inline FuzzyLinearSpace all_pairs(std::size_t v) {
  std::vector<PointSet> lines;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) lines.push_back(PointSet::of({i, j}));
  }
  return crisp_space(v, lines);
}

/// Projective plane of order 2.
inline FuzzyLinearSpace fano() {
  return crisp_space(7, {PointSet::of({0, 1, 2}), PointSet::of({0, 3, 4}), PointSet::of({0, 5, 6}),
                         PointSet::of({1, 3, 5}), PointSet::of({1, 4, 6}), PointSet::of({2, 3, 6}),
                         PointSet::of({2, 4, 5})});
}

/// A single line through all v points (b = 1).
inline FuzzyLinearSpace single_line(std::size_t v) { return crisp_space(v, {PointSet::all(v)}); }

}  // namespace fls::fixtures
