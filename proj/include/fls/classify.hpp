#pragma once

// k-fuzzy points and k-fuzzy lines.
//
// A point x is k-fuzzy when k distinct lines have a nonzero meet at x; a line
// d is k-fuzzy when k distinct points have a nonzero meet on d. On a chain a
// meet is nonzero iff every operand is, so both reduce to degree counts.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fls/space.hpp"

namespace fls {

inline bool is_k_fuzzy_point(const FuzzyLinearSpace& space, PointId x, std::size_t k) {
  return point_degree(space, x) >= k;
}

inline bool is_k_fuzzy_line(const FuzzyLine& d, std::size_t k) { return support(d).size() >= k; }

inline bool is_k_fuzzy_line(const FuzzyLinearSpace& space, std::size_t line, std::size_t k) {
  return space.supports().at(line).size() >= k;
}

struct FuzzinessSummary {
  // In point / line order.
  std::vector<std::pair<std::string, std::size_t>> per_point_degree;
  std::vector<std::pair<std::string, std::size_t>> per_line_degree;
  std::size_t max_point_k = 0;
  std::size_t max_line_k = 0;
};

inline FuzzinessSummary summarize(const FuzzyLinearSpace& space) {
  FuzzinessSummary s;
  for (std::size_t i = 0; i < space.point_count(); ++i) {
    const auto deg = point_degree(space, PointId{i});
    s.per_point_degree.emplace_back(space.point_names()[i], deg);
    s.max_point_k = std::max(s.max_point_k, deg);
  }
  for (std::size_t j = 0; j < space.line_count(); ++j) {
    const auto deg = space.supports()[j].size();
    s.per_line_degree.emplace_back(space.lines()[j].name, deg);
    s.max_line_k = std::max(s.max_line_k, deg);
  }
  return s;
}

}  // namespace fls
