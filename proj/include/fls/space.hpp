#pragma once

// Fuzzy linear space S = (N, D): named points, a chain lattice, and lines
// mapping every point to a lattice value.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fls/lattice.hpp"
#include "fls/point_set.hpp"

namespace fls {

struct FuzzyLine {
  std::string name;
  std::vector<LatticeElement> values;

  friend bool operator==(const FuzzyLine&, const FuzzyLine&) = default;
};

/// Points with nonzero value on `d`.
inline PointSet support(const FuzzyLine& d) {
  PointSet s;
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    if (!d.values[i].is_zero()) s.insert(i);
  }
  return s;
}

/// Builds a line from raw ranks.
inline FuzzyLine make_line(std::string name, const std::vector<unsigned>& ranks, ChainLattice lat) {
  FuzzyLine d{std::move(name), {}};
  d.values.reserve(ranks.size());
  for (auto r : ranks) d.values.emplace_back(r, lat);
  return d;
}

/// Crisp line over `point_count` points with value 1 on `pts`.
inline FuzzyLine indicator_line(std::string name, PointSet pts, std::size_t point_count, ChainLattice lat) {
  FuzzyLine d{std::move(name), {}};
  d.values.reserve(point_count);
  for (std::size_t i = 0; i < point_count; ++i) {
    d.values.push_back(pts.contains(i) ? LatticeElement::top(lat) : LatticeElement::bottom(lat));
  }
  return d;
}

/// Structurally well-formed space. The constructor rejects duplicate names,
/// length mismatches, and values from a different lattice; the incidence
/// axioms are checked separately by validate().
class FuzzyLinearSpace {
 public:
  FuzzyLinearSpace() = default;

  FuzzyLinearSpace(std::vector<std::string> point_names, ChainLattice lattice, std::vector<FuzzyLine> lines)
      : point_names_(std::move(point_names)), lattice_(lattice), lines_(std::move(lines)) {
    if (point_names_.size() > kMaxPoints) {
      throw std::invalid_argument("at most " + std::to_string(kMaxPoints) + " points are supported");
    }
    require_unique(point_names_, "point");
    std::vector<std::string> line_names;
    line_names.reserve(lines_.size());
    for (const auto& d : lines_) line_names.push_back(d.name);
    require_unique(line_names, "line");

    supports_.reserve(lines_.size());
    for (const auto& d : lines_) {
      if (d.values.size() != point_names_.size()) {
        throw std::invalid_argument("line '" + d.name + "' has " + std::to_string(d.values.size()) +
                                    " values for " + std::to_string(point_names_.size()) + " points");
      }
      for (const auto& e : d.values) {
        if (e.lattice() != lattice_) {
          throw std::invalid_argument("line '" + d.name + "' holds a value outside L_" +
                                      std::to_string(lattice_.n()));
        }
      }
      supports_.push_back(support(d));
    }
  }

  const std::vector<std::string>& point_names() const { return point_names_; }
  ChainLattice lattice() const { return lattice_; }
  const std::vector<FuzzyLine>& lines() const { return lines_; }
  const std::vector<PointSet>& supports() const { return supports_; }

  /// v = |N|
  std::size_t point_count() const { return point_names_.size(); }
  /// b = |D|
  std::size_t line_count() const { return lines_.size(); }
  PointSet all_points() const { return PointSet::all(point_count()); }

  std::optional<PointId> find_point(std::string_view name) const {
    auto it = std::find(point_names_.begin(), point_names_.end(), name);
    if (it == point_names_.end()) return std::nullopt;
    return PointId{static_cast<std::size_t>(it - point_names_.begin())};
  }

  std::optional<std::size_t> find_line(std::string_view name) const {
    for (std::size_t j = 0; j < lines_.size(); ++j) {
      if (lines_[j].name == name) return j;
    }
    return std::nullopt;
  }

  friend bool operator==(const FuzzyLinearSpace& a, const FuzzyLinearSpace& b) {
    return a.point_names_ == b.point_names_ && a.lattice_ == b.lattice_ && a.lines_ == b.lines_;
  }

 private:
  static void require_unique(const std::vector<std::string>& names, const char* what) {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second) throw std::invalid_argument(std::string("duplicate ") + what + " name '" + n + "'");
    }
  }

  std::vector<std::string> point_names_;
  ChainLattice lattice_{};
  std::vector<FuzzyLine> lines_;
  std::vector<PointSet> supports_;
};

// ---------------------------------------------------------------------------
// Axioms

enum class Axiom { A1, A2, A3, A4 };

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
  }
  return "?";
}

/// A1 nonempty N and D; A2 every support has at least two points; A3 every
/// point pair lies on exactly one support; A4 every two supports intersect.
struct AxiomSet {
  bool nonempty = true;
  bool min_support_two = true;
  bool unique_pair_line = true;
  bool pairwise_intersection = false;

  static constexpr AxiomSet linear() { return {}; }
  static constexpr AxiomSet with_intersection() { return {true, true, true, true}; }

  /// "a1a2a3" style id.
  std::string id() const {
    std::string s;
    if (nonempty) s += "a1";
    if (min_support_two) s += "a2";
    if (unique_pair_line) s += "a3";
    if (pairwise_intersection) s += "a4";
    return s;
  }

  friend constexpr bool operator==(AxiomSet, AxiomSet) = default;
};

/// Parses the CLI spelling: "a1a2a3" or "a1a2a3a4".
inline AxiomSet parse_axiom_set(std::string_view s) {
  if (s == "a1a2a3") return AxiomSet::linear();
  if (s == "a1a2a3a4") return AxiomSet::with_intersection();
  throw ParseError("unknown axiom set '" + std::string(s) + "' (expected a1a2a3 or a1a2a3a4)");
}

struct AxiomResult {
  Axiom axiom;
  bool passed = true;
  std::string detail;
  /// Offending lines (A2: one line, A4: a disjoint pair, A3: the lines covering a pair twice).
  std::vector<std::size_t> witness_lines;
  /// Offending points (A3: the pair).
  std::vector<std::size_t> witness_points;
};

struct ValidationReport {
  std::vector<AxiomResult> results;

  bool ok() const {
    return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
  }
  const AxiomResult* find(Axiom a) const {
    for (const auto& r : results) {
      if (r.axiom == a) return &r;
    }
    return nullptr;
  }
};

inline ValidationReport validate(const FuzzyLinearSpace& space, AxiomSet axioms = AxiomSet::linear()) {
  ValidationReport report;
  const auto& supports = space.supports();
  const auto v = space.point_count();
  const auto b = space.line_count();

  if (axioms.nonempty) {
    AxiomResult r{Axiom::A1};
    if (v == 0 || b == 0) {
      r.passed = false;
      r.detail = v == 0 ? "no points" : "no lines";
    }
    report.results.push_back(std::move(r));
  }

  if (axioms.min_support_two) {
    AxiomResult r{Axiom::A2};
    for (std::size_t j = 0; j < b; ++j) {
      if (supports[j].size() < 2) {
        r.passed = false;
        r.detail = "line '" + space.lines()[j].name + "' has support of size " + std::to_string(supports[j].size());
        r.witness_lines = {j};
        break;
      }
    }
    report.results.push_back(std::move(r));
  }

  if (axioms.unique_pair_line) {
    AxiomResult r{Axiom::A3};
    for (std::size_t x = 0; x < v && r.passed; ++x) {
      for (std::size_t y = x + 1; y < v && r.passed; ++y) {
        std::vector<std::size_t> covering;
        for (std::size_t j = 0; j < b; ++j) {
          if (supports[j].contains(x) && supports[j].contains(y)) covering.push_back(j);
        }
        if (covering.size() != 1) {
          r.passed = false;
          r.detail = "points '" + space.point_names()[x] + "' and '" + space.point_names()[y] + "' lie on " +
                     std::to_string(covering.size()) + " lines";
          r.witness_points = {x, y};
          r.witness_lines = std::move(covering);
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  if (axioms.pairwise_intersection) {
    AxiomResult r{Axiom::A4};
    for (std::size_t i = 0; i < b && r.passed; ++i) {
      for (std::size_t j = i + 1; j < b && r.passed; ++j) {
        if (!supports[i].intersects(supports[j])) {
          r.passed = false;
          r.detail = "lines '" + space.lines()[i].name + "' and '" + space.lines()[j].name + "' are disjoint";
          r.witness_lines = {i, j};
        }
      }
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Incidence queries

/// Number of lines with nonzero value at x.
inline std::size_t point_degree(const FuzzyLinearSpace& space, PointId x) {
  return static_cast<std::size_t>(std::count_if(space.supports().begin(), space.supports().end(),
                                                [&](PointSet s) { return s.contains(x.index); }));
}

/// Same points and supports over L_0, every line replaced by its support indicator.
inline FuzzyLinearSpace crisp_shadow(const FuzzyLinearSpace& space) {
  const ChainLattice crisp{0};
  std::vector<FuzzyLine> lines;
  lines.reserve(space.line_count());
  for (std::size_t j = 0; j < space.line_count(); ++j) {
    lines.push_back(indicator_line(space.lines()[j].name, space.supports()[j], space.point_count(), crisp));
  }
  return FuzzyLinearSpace(space.point_names(), crisp, std::move(lines));
}

/// The unique line whose support holds both x and y.
inline const FuzzyLine& line_through(const FuzzyLinearSpace& space, PointId x, PointId y) {
  if (x == y) throw std::invalid_argument("line_through needs two distinct points");
  if (x.index >= space.point_count() || y.index >= space.point_count()) {
    throw std::invalid_argument("point index out of range");
  }
  const FuzzyLine* found = nullptr;
  for (std::size_t j = 0; j < space.line_count(); ++j) {
    const auto s = space.supports()[j];
    if (s.contains(x.index) && s.contains(y.index)) {
      if (found != nullptr) {
        throw AxiomViolation("points '" + space.point_names()[x.index] + "' and '" + space.point_names()[y.index] +
                             "' lie on more than one line");
      }
      found = &space.lines()[j];
    }
  }
  if (found == nullptr) {
    throw AxiomViolation("no line through '" + space.point_names()[x.index] + "' and '" +
                         space.point_names()[y.index] + "'");
  }
  return *found;
}

/// Builds a crisp space with points "1".."v" and lines "d1".."db".
inline FuzzyLinearSpace crisp_space(std::size_t v, const std::vector<PointSet>& supports, ChainLattice lat = ChainLattice{0}) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < v; ++i) names.push_back(std::to_string(i + 1));
  std::vector<FuzzyLine> lines;
  for (std::size_t j = 0; j < supports.size(); ++j) {
    lines.push_back(indicator_line("d" + std::to_string(j + 1), supports[j], v, lat));
  }
  return FuzzyLinearSpace(std::move(names), lat, std::move(lines));
}

}  // namespace fls
