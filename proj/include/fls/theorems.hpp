#pragma once

// Clause-by-clause checkers for the de Bruijn-Erdos theorem on crisp linear
// spaces and for its fuzzy generalization.
//
//   C1  b >= v
//   C2  any two lines share a point with nonzero meet
//   C3  shape: one (v-1)-fuzzy line and all others 2-fuzzy (near-pencil), or
//       every line (k+1)-fuzzy for a common k >= 2 (uniform)
//   C4  uniform case: every point on exactly k+1 lines, plus the product
//       prod_j (|L|-1)^{v_j} over the lines through each point
//
// A failing clause is data in the Verdict, never an exception. Exceptions
// are reserved for spaces outside the theorem's hypotheses.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fls/closure.hpp"
#include "fls/counting.hpp"
#include "fls/space.hpp"

namespace fls {

enum class Theorem { kClassical, kGeneralized };
enum class Shape { kNearPencil, kUniform, kNeither };

inline const char* shape_name(Shape s) {
  switch (s) {
    case Shape::kNearPencil: return "near_pencil";
    case Shape::kUniform: return "uniform";
    case Shape::kNeither: return "neither";
  }
  return "?";
}

struct LineWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string first_name;
  std::string second_name;

  friend bool operator==(const LineWitness&, const LineWitness&) = default;
};

struct Verdict {
  Theorem theorem = Theorem::kGeneralized;
  std::size_t b = 0;
  std::size_t v = 0;

  // C1, with the strict form reported alongside.
  bool b_geq_v = false;
  bool b_gt_v = false;

  // C2
  bool pairwise_intersection = false;
  std::optional<LineWitness> intersection_witness;

  // C3
  Shape shape = Shape::kNeither;
  std::optional<std::size_t> k;

  // C4
  std::optional<bool> uniform_point_regular;
  std::optional<Count> fuzz_point_product;

  bool closure_idempotent = false;
  std::vector<std::string> notes;

  /// Whether every clause the theorem asserts for this space holds.
  bool holds() const {
    if (theorem == Theorem::kClassical) {
      if (!b_geq_v) return false;
      if (b != v) return true;
      return pairwise_intersection && shape != Shape::kNeither;
    }
    return b_geq_v && pairwise_intersection && shape != Shape::kNeither &&
           (shape != Shape::kUniform || uniform_point_regular.value_or(false));
  }
};

/// Equality of everything except the C4 product, which depends on |L|.
inline bool same_clauses(const Verdict& a, const Verdict& b) {
  return a.theorem == b.theorem && a.b == b.b && a.v == b.v && a.b_geq_v == b.b_geq_v && a.b_gt_v == b.b_gt_v &&
         a.pairwise_intersection == b.pairwise_intersection && a.intersection_witness == b.intersection_witness &&
         a.shape == b.shape && a.k == b.k && a.uniform_point_regular == b.uniform_point_regular &&
         a.closure_idempotent == b.closure_idempotent && a.notes == b.notes;
}

namespace detail {

inline void require_hypotheses(const FuzzyLinearSpace& space, AxiomSet axioms, std::size_t min_points) {
  const auto report = validate(space, axioms);
  for (const auto& r : report.results) {
    if (!r.passed) {
      throw std::invalid_argument(std::string("hypothesis failed: axiom ") + axiom_name(r.axiom) + " (" + r.detail + ")");
    }
  }
  if (space.line_count() <= 1) throw std::invalid_argument("hypothesis failed: b = |D| > 1");
  if (space.point_count() < min_points) {
    throw std::invalid_argument("hypothesis failed: v = |N| >= " + std::to_string(min_points));
  }
}

/// First pair of lines (in index order) with disjoint supports.
inline std::optional<LineWitness> disjoint_lines(const FuzzyLinearSpace& space) {
  const auto& s = space.supports();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!s[i].intersects(s[j])) return LineWitness{i, j, space.lines()[i].name, space.lines()[j].name};
    }
  }
  return std::nullopt;
}

/// Near-pencil or line-uniform shape from support sizes alone. With v = 3
/// the (v-1)-point line and the 2-point lines coincide, and all-2 counts as
/// near-pencil.
inline std::pair<Shape, std::optional<std::size_t>> line_shape(const FuzzyLinearSpace& space) {
  const auto sizes = support_sizes(space);
  const auto v = space.point_count();
  if (sizes.empty()) return {Shape::kNeither, std::nullopt};

  const auto long_lines = static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), v - 1));
  const auto two_lines = static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), std::size_t{2}));
  if (v == 3) {
    if (two_lines == sizes.size()) return {Shape::kNearPencil, std::nullopt};
  } else if (v > 3 && long_lines == 1 && two_lines + 1 == sizes.size()) {
    return {Shape::kNearPencil, std::nullopt};
  }

  const bool uniform = std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s == sizes.front(); });
  if (uniform && sizes.front() >= 3) return {Shape::kUniform, sizes.front() - 1};
  return {Shape::kNeither, std::nullopt};
}

inline bool every_point_on(const FuzzyLinearSpace& space, std::size_t lines) {
  for (std::size_t x = 0; x < space.point_count(); ++x) {
    if (point_degree(space, PointId{x}) != lines) return false;
  }
  return true;
}

/// Product of (|L|-1)^{v_j} over the lines through x; nullopt when it differs between points.
inline std::optional<Count> common_point_product(const FuzzyLinearSpace& space) {
  std::optional<Count> common;
  for (std::size_t x = 0; x < space.point_count(); ++x) {
    Count p = 1;
    for (auto s : space.supports()) {
      if (s.contains(x)) p *= count_k_fuzzy_line_labelings(s.size(), space.lattice());
    }
    if (common && *common != p) return std::nullopt;
    common = p;
  }
  return common;
}

/// <<X>> = <X> for every two-point X, existential reading.
inline bool closure_idempotent_on_pairs(const FuzzyLinearSpace& space) {
  const auto v = space.point_count();
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = x + 1; y < v; ++y) {
      const auto once = closure(space, PointSet::of({x, y}));
      if (closure(space, once) != once) return false;
    }
  }
  return true;
}

inline Verdict base_verdict(const FuzzyLinearSpace& space, Theorem theorem) {
  Verdict out;
  out.theorem = theorem;
  out.b = space.line_count();
  out.v = space.point_count();
  out.b_geq_v = out.b >= out.v;
  out.b_gt_v = out.b > out.v;
  out.intersection_witness = disjoint_lines(space);
  out.pairwise_intersection = !out.intersection_witness.has_value();
  out.closure_idempotent = closure_idempotent_on_pairs(space);
  if (out.b == out.v) out.notes.emplace_back("b = v: the strict inequality b > v does not hold");
  return out;
}

}  // namespace detail

/// Classical theorem on a crisp linear space (n = 0, axioms A1-A3, b > 1).
inline Verdict check_classical_dbe(const FuzzyLinearSpace& space) {
  if (!space.lattice().is_crisp()) throw std::invalid_argument("hypothesis failed: classical check needs n = 0");
  detail::require_hypotheses(space, AxiomSet::linear(), 2);

  auto out = detail::base_verdict(space, Theorem::kClassical);
  auto [shape, k] = detail::line_shape(space);
  if (shape == Shape::kUniform) {
    out.uniform_point_regular = detail::every_point_on(space, *k + 1);
    if (!*out.uniform_point_regular) {
      shape = Shape::kNeither;
      out.notes.emplace_back("lines all have " + std::to_string(*k + 1) + " points but points are not on " +
                             std::to_string(*k + 1) + " lines each");
    }
  }
  out.shape = shape;
  out.k = shape == Shape::kUniform ? k : std::nullopt;
  if (out.b != out.v) out.notes.emplace_back("b != v: the equality-case clauses are not asserted");
  return out;
}

/// Generalized theorem on any fuzzy linear space satisfying `axioms`, b > 1, v >= 3.
inline Verdict check_generalized_dbe(const FuzzyLinearSpace& space, AxiomSet axioms = AxiomSet::linear()) {
  detail::require_hypotheses(space, axioms, 3);

  auto out = detail::base_verdict(space, Theorem::kGeneralized);
  const auto [shape, k] = detail::line_shape(space);
  out.shape = shape;
  out.k = k;
  if (shape == Shape::kUniform) {
    out.uniform_point_regular = detail::every_point_on(space, *k + 1);
    out.fuzz_point_product = detail::common_point_product(space);
    out.notes.emplace_back("point fuzziness product is a labeling-configuration count; point degree is at most b");
    if (!out.fuzz_point_product) out.notes.emplace_back("point fuzziness product differs between points");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

enum class ReportFormat { kText, kJson };

inline nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["theorem"] = v.theorem == Theorem::kClassical ? "classical" : "generalized";
  j["holds"] = v.holds();
  j["b"] = v.b;
  j["v"] = v.v;
  j["bGeqV"] = v.b_geq_v;
  j["bGtV"] = v.b_gt_v;
  j["pairwiseIntersection"] = v.pairwise_intersection;
  if (v.intersection_witness) {
    j["intersectionWitness"] = {v.intersection_witness->first_name, v.intersection_witness->second_name};
  } else {
    j["intersectionWitness"] = nullptr;
  }
  j["shape"] = shape_name(v.shape);
  j["k"] = v.k ? nlohmann::ordered_json(*v.k) : nlohmann::ordered_json(nullptr);
  j["uniformPointRegular"] =
      v.uniform_point_regular ? nlohmann::ordered_json(*v.uniform_point_regular) : nlohmann::ordered_json(nullptr);
  j["fuzzPointProduct"] =
      v.fuzz_point_product ? nlohmann::ordered_json(to_decimal(*v.fuzz_point_product)) : nlohmann::ordered_json(nullptr);
  j["closureIdempotent"] = v.closure_idempotent;
  j["notes"] = v.notes;
  return j;
}

inline std::string render_verdict(const Verdict& v, ReportFormat format) {
  if (format == ReportFormat::kJson) return verdict_json(v).dump(2) + "\n";

  auto yes = [](bool b) { return b ? "holds" : "FAILS"; };
  std::ostringstream os;
  os << (v.theorem == Theorem::kClassical ? "classical" : "generalized") << " de Bruijn-Erdos check (b = " << v.b
     << ", v = " << v.v << ")\n";
  os << "  C1  b >= v                 " << yes(v.b_geq_v) << (v.b_gt_v ? "  (strict)" : "  (not strict)") << "\n";
  os << "  C2  lines pairwise meet    " << yes(v.pairwise_intersection);
  if (v.intersection_witness) {
    os << "  witness: " << v.intersection_witness->first_name << ", " << v.intersection_witness->second_name;
  }
  os << "\n";
  os << "  C3  shape                  " << shape_name(v.shape);
  if (v.k) os << " (k = " << *v.k << ")";
  os << "\n";
  if (v.uniform_point_regular) {
    os << "  C4  points on k+1 lines    " << yes(*v.uniform_point_regular) << "\n";
  }
  if (v.fuzz_point_product) os << "  C4  point product          " << to_decimal(*v.fuzz_point_product) << "\n";
  os << "  closure idempotent on pairs: " << (v.closure_idempotent ? "yes" : "no") << "\n";
  for (const auto& n : v.notes) os << "  note: " << n << "\n";
  os << "  verdict: " << (v.holds() ? "all checked clauses hold" : "some clause fails") << "\n";
  return os.str();
}

}  // namespace fls
