#pragma once

// Exhaustive generation of small linear-space skeletons and their fuzzy
// labelings, with isomorphism rejection by brute-force canonical form.
//
// A skeleton is a crisp space on points 1..v whose lines cover every point
// pair exactly once. Skeletons are produced by backtracking on the smallest
// uncovered pair: the line through that pair is chosen among all point sets
// whose internal pairs are still uncovered, so each skeleton appears once.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fls/counting.hpp"
#include "fls/space.hpp"
#include "fls/theorems.hpp"

namespace fls {

inline constexpr std::size_t kMinEnumPoints = 3;
inline constexpr std::size_t kMaxEnumPoints = 7;

namespace detail {

inline void require_enum_range(std::size_t v) {
  if (v < kMinEnumPoints || v > kMaxEnumPoints) {
    throw std::invalid_argument("enumeration needs " + std::to_string(kMinEnumPoints) + " <= v <= " +
                                std::to_string(kMaxEnumPoints) + ", got " + std::to_string(v));
  }
}

/// Pair-coverage bookkeeping for v <= 7 (at most 21 pairs).
class PairTable {
 public:
  explicit PairTable(std::size_t v) : v_(v) {
    std::size_t next = 0;
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) {
        index_[i][j] = index_[j][i] = next;
        pairs_.emplace_back(i, j);
        ++next;
      }
    }
    for (std::uint32_t set = 0; set < (1u << v); ++set) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < v; ++i) {
        if (!((set >> i) & 1u)) continue;
        for (std::size_t j = i + 1; j < v; ++j) {
          if ((set >> j) & 1u) mask |= 1u << index_[i][j];
        }
      }
      line_mask_.push_back(mask);
    }
  }

  std::size_t pair_count() const { return pairs_.size(); }
  std::uint32_t full() const { return pairs_.empty() ? 0 : (std::uint32_t{1} << pairs_.size()) - 1; }
  std::uint32_t bit(std::size_t i, std::size_t j) const { return std::uint32_t{1} << index_[i][j]; }
  std::pair<std::size_t, std::size_t> pair(std::size_t idx) const { return pairs_[idx]; }
  std::uint32_t line_mask(std::uint32_t point_set) const { return line_mask_[point_set]; }

 private:
  std::size_t v_;
  std::array<std::array<std::size_t, kMaxEnumPoints>, kMaxEnumPoints> index_{};
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::uint32_t> line_mask_;
};

template <typename F>
void extend_skeleton(const PairTable& table, std::size_t v, std::uint32_t covered, std::vector<PointSet>& lines, F& emit) {
  if (covered == table.full()) {
    emit(static_cast<const std::vector<PointSet>&>(lines));
    return;
  }
  const auto [i, j] = table.pair(static_cast<std::size_t>(std::countr_one(covered)));
  std::uint32_t candidates = 0;
  for (std::size_t c = 0; c < v; ++c) {
    if (c == i || c == j) continue;
    if (!(covered & table.bit(c, i)) && !(covered & table.bit(c, j))) candidates |= 1u << c;
  }
  const std::uint32_t base = (1u << i) | (1u << j);
  for_each_subset(PointSet(candidates), [&](PointSet extra) {
    const auto line = base | static_cast<std::uint32_t>(extra.bits());
    const auto mask = table.line_mask(line);
    if (mask & covered) return;
    lines.push_back(PointSet(line));
    extend_skeleton(table, v, covered | mask, lines, emit);
    lines.pop_back();
  });
}

}  // namespace detail

/// Calls f(supports) for every labeled skeleton on v points, in a fixed order.
template <typename F>
void for_each_skeleton(std::size_t v, bool nontrivial_only, F&& f) {
  detail::require_enum_range(v);
  const detail::PairTable table(v);
  std::vector<PointSet> lines;
  auto emit = [&](const std::vector<PointSet>& supports) {
    if (nontrivial_only && supports.size() <= 1) return;
    f(supports);
  };
  detail::extend_skeleton(table, v, 0, lines, emit);
}

/// Every labeled skeleton on v points, as crisp spaces.
inline std::vector<FuzzyLinearSpace> enumerate_skeletons(std::size_t v, bool nontrivial_only) {
  std::vector<FuzzyLinearSpace> out;
  for_each_skeleton(v, nontrivial_only, [&](const std::vector<PointSet>& s) { out.push_back(crisp_space(v, s)); });
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

/// Lines as packed value words (first point in the most significant byte),
/// sorted ascending. Lexicographic order on this vector is the canonical order.
using CanonicalKey = std::vector<std::uint64_t>;

namespace detail {

inline void require_canon_range(const FuzzyLinearSpace& space) {
  if (space.point_count() > kMaxEnumPoints) {
    throw std::invalid_argument("canonical form limited to v <= " + std::to_string(kMaxEnumPoints));
  }
}

/// Key of the space relabeled so that old point i becomes new point perm[i].
inline CanonicalKey permuted_key(const FuzzyLinearSpace& space, const std::vector<std::size_t>& perm) {
  const auto v = space.point_count();
  CanonicalKey key;
  key.reserve(space.line_count());
  for (const auto& d : space.lines()) {
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < v; ++i) {
      word |= std::uint64_t{d.values[i].rank()} << (8 * (v - 1 - perm[i]));
    }
    key.push_back(word);
  }
  std::sort(key.begin(), key.end());
  return key;
}

struct CanonicalResult {
  CanonicalKey key;
  std::vector<std::size_t> perm;
  std::size_t automorphisms = 0;
};

inline CanonicalResult canonical_search(const FuzzyLinearSpace& space) {
  require_canon_range(space);
  std::vector<std::size_t> perm(space.point_count());
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalResult best;
  bool first = true;
  do {
    auto key = permuted_key(space, perm);
    if (first || key < best.key) {
      best.key = std::move(key);
      best.perm = perm;
      best.automorphisms = 1;
      first = false;
    } else if (key == best.key) {
      ++best.automorphisms;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline FuzzyLinearSpace space_from_key(std::size_t v, ChainLattice lat, const CanonicalKey& key) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < v; ++i) names.push_back(std::to_string(i + 1));
  std::vector<FuzzyLine> lines;
  for (std::size_t j = 0; j < key.size(); ++j) {
    std::vector<unsigned> ranks(v);
    for (std::size_t i = 0; i < v; ++i) ranks[i] = static_cast<unsigned>((key[j] >> (8 * (v - 1 - i))) & 0xffu);
    lines.push_back(make_line("d" + std::to_string(j + 1), ranks, lat));
  }
  return FuzzyLinearSpace(std::move(names), lat, std::move(lines));
}

}  // namespace detail

inline CanonicalKey canonical_key(const FuzzyLinearSpace& space) { return detail::canonical_search(space).key; }

/// Minimum relabeling over all point permutations, with points named 1..v
/// and lines d1..db in canonical order. Two spaces over the same lattice are
/// isomorphic iff their canonical forms are equal.
inline FuzzyLinearSpace canonicalize(const FuzzyLinearSpace& space) {
  const auto key = canonical_key(space);
  return detail::space_from_key(space.point_count(), space.lattice(), key);
}

/// Number of point permutations fixing the space.
inline std::size_t automorphism_count(const FuzzyLinearSpace& space) {
  return detail::canonical_search(space).automorphisms;
}

/// Applies a point permutation: old point i becomes new point perm[i]. Names move with the points.
inline FuzzyLinearSpace permute_points(const FuzzyLinearSpace& space, const std::vector<std::size_t>& perm) {
  const auto v = space.point_count();
  if (perm.size() != v) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::string> names(v);
  for (std::size_t i = 0; i < v; ++i) names.at(perm[i]) = space.point_names()[i];
  std::vector<FuzzyLine> lines;
  for (const auto& d : space.lines()) {
    FuzzyLine out{d.name, std::vector<LatticeElement>(v)};
    for (std::size_t i = 0; i < v; ++i) out.values[perm[i]] = d.values[i];
    lines.push_back(std::move(out));
  }
  return FuzzyLinearSpace(std::move(names), space.lattice(), std::move(lines));
}

// ---------------------------------------------------------------------------
// Skeleton classes

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

struct SkeletonClass {
  FuzzyLinearSpace canonical;
  CanonicalKey key;
  std::size_t automorphisms = 0;
  /// Labeled copies on points 1..v: v! / |Aut|.
  std::size_t labeled_copies = 0;
};

struct SkeletonCensus {
  std::size_t v = 0;
  /// Sorted by canonical key.
  std::vector<SkeletonClass> classes;
  /// Labeled skeletons seen by the enumerator.
  std::size_t labeled_total = 0;

  /// Orbit-stabilizer cross-check: sum of v!/|Aut| over classes equals the labeled count.
  bool consistent() const {
    std::size_t sum = 0;
    for (const auto& c : classes) sum += c.labeled_copies;
    return sum == labeled_total;
  }
};

/// Isomorphism classes of skeletons on v points. Each new class inserts all
/// of its labeled images into a lookup set, so later copies are rejected
/// without a canonical-form search.
inline SkeletonCensus skeleton_classes(std::size_t v, bool nontrivial_only) {
  SkeletonCensus census;
  census.v = v;

  // A skeleton on <= 7 points is a set of subsets of a 7-set: a 128-bit indicator.
  struct Key128 {
    std::uint64_t lo = 0, hi = 0;
    bool operator==(const Key128&) const = default;
  };
  struct Hash {
    std::size_t operator()(const Key128& k) const { return std::hash<std::uint64_t>{}(k.lo * 0x9e3779b97f4a7c15ull ^ k.hi); }
  };
  auto indicator = [](const std::vector<PointSet>& lines) {
    Key128 k;
    for (auto s : lines) {
      const auto b = s.bits();
      if (b < 64) k.lo |= std::uint64_t{1} << b;
      else k.hi |= std::uint64_t{1} << (b - 64);
    }
    return k;
  };
  std::unordered_map<Key128, std::size_t, Hash> seen;

  for_each_skeleton(v, nontrivial_only, [&](const std::vector<PointSet>& lines) {
    ++census.labeled_total;
    if (seen.contains(indicator(lines))) return;

    const auto space = crisp_space(v, lines);
    const auto found = detail::canonical_search(space);
    SkeletonClass cls{detail::space_from_key(v, space.lattice(), found.key), found.key, found.automorphisms,
                      factorial(v) / found.automorphisms};
    const auto index = census.classes.size();
    census.classes.push_back(std::move(cls));

    std::vector<std::size_t> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<PointSet> image(lines.size());
    do {
      for (std::size_t j = 0; j < lines.size(); ++j) {
        PointSet s;
        for (auto i : lines[j].indices()) s.insert(perm[i]);
        image[j] = s;
      }
      seen.emplace(indicator(image), index);
    } while (std::next_permutation(perm.begin(), perm.end()));
  });

  std::sort(census.classes.begin(), census.classes.end(),
            [](const SkeletonClass& a, const SkeletonClass& b) { return a.key < b.key; });
  return census;
}

// ---------------------------------------------------------------------------
// Labelings

struct LabelingSummary {
  /// Number of nonzero labelings of the skeleton (its space cardinality over the lattice).
  Count total;
  std::size_t emitted = 0;
  /// True when total exceeded the cap and a seeded sample was emitted instead.
  bool sampled = false;
};

inline constexpr std::size_t kDefaultLabelingCap = 10000;

namespace detail {

inline FuzzyLinearSpace labeled_space(const FuzzyLinearSpace& skeleton, ChainLattice lat,
                                      const std::vector<std::uint8_t>& ranks) {
  std::vector<FuzzyLine> lines;
  std::size_t pos = 0;
  for (std::size_t j = 0; j < skeleton.line_count(); ++j) {
    FuzzyLine d{skeleton.lines()[j].name,
                std::vector<LatticeElement>(skeleton.point_count(), LatticeElement::bottom(lat))};
    for (auto i : skeleton.supports()[j].indices()) d.values[i] = LatticeElement(ranks[pos++], lat);
    lines.push_back(std::move(d));
  }
  return FuzzyLinearSpace(skeleton.point_names(), lat, std::move(lines));
}

/// Uniform integer in [0, bound) by rejection, independent of the standard
/// library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const auto r = rng();
    if (r < limit) return r % bound;
  }
}

}  // namespace detail

/// Calls f(space) for nonzero labelings of the skeleton's supports over `lat`.
/// All of them in lexicographic order (lines in order, support points
/// ascending, ranks a1 < ... < 1) when there are at most `cap`; otherwise
/// `cap` distinct labelings drawn uniformly with the given seed, emitted in
/// lexicographic order.
template <typename F>
LabelingSummary for_each_labeling(const FuzzyLinearSpace& skeleton, ChainLattice lat, std::size_t cap,
                                  std::uint64_t seed, F&& f) {
  if (lat.top_rank() > 255) throw std::invalid_argument("labeling enumeration supports n <= 254");
  LabelingSummary summary;
  const auto sizes = support_sizes(skeleton);
  summary.total = count_k_fuzzy_point_configs(sizes, lat);
  const std::size_t positions = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  const auto top = static_cast<std::uint8_t>(lat.top_rank());

  if (summary.total <= cap) {
    std::vector<std::uint8_t> ranks(positions, 1);
    for (;;) {
      f(detail::labeled_space(skeleton, lat, ranks));
      ++summary.emitted;
      std::size_t i = positions;
      bool carried_out = true;
      while (i > 0) {
        --i;
        if (ranks[i] < top) {
          ++ranks[i];
          carried_out = false;
          break;
        }
        ranks[i] = 1;
      }
      if (carried_out) break;
    }
    return summary;
  }

  summary.sampled = true;
  std::mt19937_64 rng(seed);
  std::set<std::vector<std::uint8_t>> chosen;
  while (chosen.size() < cap) {
    std::vector<std::uint8_t> ranks(positions);
    for (auto& r : ranks) r = static_cast<std::uint8_t>(1 + detail::uniform_below(rng, lat.nonzero_count()));
    chosen.insert(std::move(ranks));
  }
  for (const auto& ranks : chosen) {
    f(detail::labeled_space(skeleton, lat, ranks));
    ++summary.emitted;
  }
  return summary;
}

inline std::vector<FuzzyLinearSpace> enumerate_labelings(const FuzzyLinearSpace& skeleton, ChainLattice lat,
                                                         std::size_t cap, std::uint64_t seed,
                                                         LabelingSummary* summary = nullptr) {
  std::vector<FuzzyLinearSpace> out;
  auto s = for_each_labeling(skeleton, lat, cap, seed, [&](FuzzyLinearSpace sp) { out.push_back(std::move(sp)); });
  if (summary != nullptr) *summary = s;
  return out;
}

// ---------------------------------------------------------------------------
// Clauses and counterexample search

enum class Clause { kC1, kC2, kC3, kC4, kAll };

inline const char* clause_name(Clause c) {
  switch (c) {
    case Clause::kC1: return "c1";
    case Clause::kC2: return "c2";
    case Clause::kC3: return "c3";
    case Clause::kC4: return "c4";
    case Clause::kAll: return "all";
  }
  return "?";
}

inline Clause parse_clause(std::string_view s) {
  if (s == "c1") return Clause::kC1;
  if (s == "c2") return Clause::kC2;
  if (s == "c3") return Clause::kC3;
  if (s == "c4") return Clause::kC4;
  if (s == "all") return Clause::kAll;
  throw ParseError("unknown clause '" + std::string(s) + "' (expected c1, c2, c3, c4, or all)");
}

inline bool clause_fails(const Verdict& v, Clause c) {
  switch (c) {
    case Clause::kC1: return !v.b_geq_v;
    case Clause::kC2: return !v.pairwise_intersection;
    case Clause::kC3: return v.shape == Shape::kNeither;
    case Clause::kC4: return v.shape == Shape::kUniform && !v.uniform_point_regular.value_or(false);
    case Clause::kAll: return !v.holds();
  }
  return false;
}

/// Per-skeleton labeling seed; depends only on the inputs, never on scheduling.
inline std::uint64_t labeling_seed(std::uint64_t seed, std::size_t v, std::size_t class_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(class_index)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (std::uint64_t{out[0]} << 32) | out[1];
}

struct Counterexample {
  FuzzyLinearSpace skeleton;
  /// First failing labeling.
  FuzzyLinearSpace space;
  Verdict verdict;
  std::size_t labelings_checked = 0;
  std::size_t labelings_failing = 0;
};

struct CounterexampleReport {
  Clause clause = Clause::kAll;
  std::size_t skeletons_checked = 0;
  /// Nontrivial skeletons rejected by the axiom set before checking.
  std::size_t skeletons_excluded = 0;
  bool sampled = false;
  std::vector<Counterexample> found;
};

/// Runs the generalized checker over every nontrivial skeleton class with
/// 3 <= v <= v_max (labelings per cap) and collects those failing `clause`.
inline CounterexampleReport search_counterexamples(std::size_t v_max, ChainLattice lat, Clause clause,
                                                   AxiomSet axioms = AxiomSet::linear(),
                                                   std::size_t cap = kDefaultLabelingCap, std::uint64_t seed = 0) {
  detail::require_enum_range(v_max);
  CounterexampleReport report;
  report.clause = clause;
  for (std::size_t v = kMinEnumPoints; v <= v_max; ++v) {
    const auto census = skeleton_classes(v, true);
    for (std::size_t c = 0; c < census.classes.size(); ++c) {
      const auto& skeleton = census.classes[c].canonical;
      if (!validate(skeleton, axioms).ok()) {
        ++report.skeletons_excluded;
        continue;
      }
      ++report.skeletons_checked;
      std::optional<Counterexample> hit;
      std::size_t checked = 0;
      const auto summary = for_each_labeling(skeleton, lat, cap, labeling_seed(seed, v, c), [&](FuzzyLinearSpace sp) {
        ++checked;
        auto verdict = check_generalized_dbe(sp, axioms);
        if (!clause_fails(verdict, clause)) return;
        if (!hit) hit = Counterexample{skeleton, std::move(sp), std::move(verdict), 0, 0};
        ++hit->labelings_failing;
      });
      report.sampled = report.sampled || summary.sampled;
      if (hit) {
        hit->labelings_checked = checked;
        report.found.push_back(std::move(*hit));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Census

struct LabelingStats {
  Count total;
  std::size_t checked = 0;
  bool sampled = false;
  /// Labelings failing C1..C4.
  std::array<std::size_t, 4> clause_failures{};
  std::size_t holding = 0;
  /// Every labeling's verdict matched the crisp skeleton's apart from the C4 product.
  bool clauses_invariant = true;
};

struct CensusEntry {
  FuzzyLinearSpace canonical_space;
  std::size_t automorphism_count = 0;
  /// Labeled copies of the skeleton on points 1..v.
  Count labeled_count;
  std::optional<Verdict> verdict;
  /// Why no verdict was computed (outside the theorem's hypotheses).
  std::string excluded_reason;
  LabelingStats labelings;
};

struct CensusOptions {
  bool nontrivial_only = false;
  std::size_t cap = kDefaultLabelingCap;
  std::uint64_t seed = 0;
  AxiomSet axioms = AxiomSet::linear();
  std::size_t workers = 1;
};

struct Census {
  std::size_t v = 0;
  ChainLattice lattice;
  CensusOptions options;
  std::size_t labeled_skeletons = 0;
  bool cross_check = false;
  std::vector<CensusEntry> entries;
};

namespace detail {

inline CensusEntry census_entry(const SkeletonClass& cls, std::size_t index, ChainLattice lat,
                                const CensusOptions& opt) {
  CensusEntry e;
  e.canonical_space = cls.canonical;
  e.automorphism_count = cls.automorphisms;
  e.labeled_count = cls.labeled_copies;
  try {
    e.verdict = check_generalized_dbe(cls.canonical, opt.axioms);
  } catch (const std::invalid_argument& err) {
    e.excluded_reason = err.what();
    e.labelings.total = count_k_fuzzy_point_configs(support_sizes(cls.canonical), lat);
    return e;
  }
  const auto summary =
      for_each_labeling(cls.canonical, lat, opt.cap, labeling_seed(opt.seed, cls.canonical.point_count(), index),
                        [&](const FuzzyLinearSpace& sp) {
                          const auto v = check_generalized_dbe(sp, opt.axioms);
                          for (std::size_t c = 0; c < 4; ++c) {
                            if (clause_fails(v, static_cast<Clause>(c))) ++e.labelings.clause_failures[c];
                          }
                          if (v.holds()) ++e.labelings.holding;
                          if (!same_clauses(v, *e.verdict)) e.labelings.clauses_invariant = false;
                        });
  e.labelings.total = summary.total;
  e.labelings.checked = summary.emitted;
  e.labelings.sampled = summary.sampled;
  return e;
}

}  // namespace detail

/// Census of skeleton classes on v points with verdicts and labeling stats.
/// Entries are computed independently and stored by class index, so the
/// result does not depend on the worker count.
inline Census build_census(std::size_t v, ChainLattice lat, const CensusOptions& options) {
  const auto classes = skeleton_classes(v, options.nontrivial_only);
  Census census;
  census.v = v;
  census.lattice = lat;
  census.options = options;
  census.labeled_skeletons = classes.labeled_total;
  census.cross_check = classes.consistent();
  census.entries.resize(classes.classes.size());

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, classes.classes.size()));
  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < classes.classes.size(); i += workers) {
      census.entries[i] = detail::census_entry(classes.classes[i], i, lat, options);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return census;
}

}  // namespace fls
