#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fls/fixtures.hpp"
#include "test_support.hpp"

namespace fls {
namespace {

TEST(Skeletons, ThreePoints) {
  EXPECT_EQ(enumerate_skeletons(3, false).size(), 2u);
  const auto nontrivial = enumerate_skeletons(3, true);
  ASSERT_EQ(nontrivial.size(), 1u);
  EXPECT_EQ(canonicalize(nontrivial[0]), canonicalize(fixtures::triangle()));
}

TEST(Skeletons, FourPointsUpToIsomorphism) {
  const auto all = skeleton_classes(4, false);
  EXPECT_EQ(all.classes.size(), 3u);
  EXPECT_EQ(all.labeled_total, 6u);  // 1 line, 4 near-pencils, 1 all-pairs
  EXPECT_TRUE(all.consistent());
  EXPECT_EQ(skeleton_classes(4, true).classes.size(), 2u);

  std::set<CanonicalKey> keys;
  for (const auto& c : all.classes) keys.insert(c.key);
  EXPECT_TRUE(keys.contains(canonical_key(fixtures::single_line(4))));
  EXPECT_TRUE(keys.contains(canonical_key(fixtures::near_pencil(4))));
  EXPECT_TRUE(keys.contains(canonical_key(fixtures::all_pairs(4))));
}

TEST(Skeletons, ClassCountsAndOrbitCrossCheck) {
  // Linear spaces on v points up to isomorphism.
  const std::size_t expected[] = {0, 0, 0, 2, 3, 5, 10, 24};
  for (std::size_t v = 3; v <= 7; ++v) {
    const auto census = skeleton_classes(v, false);
    EXPECT_EQ(census.classes.size(), expected[v]) << v;
    EXPECT_TRUE(census.consistent()) << v;
    EXPECT_EQ(census.labeled_total, enumerate_skeletons(v, false).size());
  }
}

TEST(Skeletons, EveryEmittedSkeletonIsLinear) {
  for (std::size_t v = 3; v <= 7; ++v) {
    std::set<std::vector<std::uint64_t>> seen;
    for_each_skeleton(v, false, [&](const std::vector<PointSet>& lines) {
      EXPECT_TRUE(validate(crisp_space(v, lines)).ok());
      std::vector<std::uint64_t> sorted;
      for (auto l : lines) sorted.push_back(l.bits());
      std::sort(sorted.begin(), sorted.end());
      EXPECT_TRUE(seen.insert(sorted).second) << "duplicate skeleton";
    });
  }
}

TEST(Skeletons, SevenPointsContainFano) {
  const auto fano_key = canonical_key(crisp_space(7, testing::cyclic_fano_lines()));
  bool found = false;
  for (const auto& c : skeleton_classes(7, true).classes) found = found || c.key == fano_key;
  EXPECT_TRUE(found);
  EXPECT_EQ(canonical_key(fixtures::fano()), fano_key);
}

TEST(Skeletons, RangeEnforced) {
  EXPECT_THROW(enumerate_skeletons(2, false), std::invalid_argument);
  EXPECT_THROW(enumerate_skeletons(8, false), std::invalid_argument);
}

TEST(Canonical, NearPencilApexPosition) {
  const auto apex_last = fixtures::near_pencil(4);
  const auto apex_first = crisp_space(4, {PointSet::of({1, 2, 3}), PointSet::of({0, 1}), PointSet::of({0, 2}),
                                          PointSet::of({0, 3})});
  EXPECT_EQ(canonicalize(apex_first), canonicalize(apex_last));
}

TEST(Canonical, Idempotent) {
  const auto once = canonicalize(fixtures::triangle());
  EXPECT_EQ(canonicalize(once), once);
}

TEST(Canonical, XyzTriangleSwap) {
  const auto xyz = fixtures::xyz_triangle();
  const auto swapped = permute_points(xyz, {0, 2, 1});
  EXPECT_NE(swapped.lines(), xyz.lines());
  EXPECT_EQ(canonicalize(swapped), canonicalize(xyz));
  EXPECT_EQ(canonicalize(permute_points(fixtures::xyz_triangle_l1(), {0, 2, 1})), canonicalize(fixtures::xyz_triangle_l1()));
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  EXPECT_NE(canonicalize(fixtures::near_pencil(5)), canonicalize(fixtures::all_pairs(5)));
  // Same supports, different values.
  const ChainLattice l1{1};
  const FuzzyLinearSpace a({"x", "y"}, l1, {make_line("d", {1, 2}, l1)});
  const FuzzyLinearSpace b({"x", "y"}, l1, {make_line("d", {1, 1}, l1)});
  EXPECT_NE(canonicalize(a), canonicalize(b));
}

TEST(Canonical, AutomorphismCounts) {
  EXPECT_EQ(automorphism_count(fixtures::triangle()), 6u);
  EXPECT_EQ(automorphism_count(fixtures::near_pencil(4)), 6u);
  EXPECT_EQ(automorphism_count(fixtures::all_pairs(4)), 24u);
  EXPECT_EQ(automorphism_count(fixtures::fano()), 168u);
}

TEST(CanonicalProperty, InvariantUnderRandomPermutations) {
  std::mt19937_64 rng(99);
  std::vector<FuzzyLinearSpace> pool;
  for (std::size_t v = 3; v <= 6; ++v) {
    for (const auto& c : skeleton_classes(v, false).classes) pool.push_back(c.canonical);
  }
  pool.push_back(fixtures::fano());
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& base = pool[pick(rng)];
    const auto labeled = testing::random_relabeling(base, ChainLattice{static_cast<unsigned>(trial % 3)}, rng);
    const auto perm = testing::random_permutation(base.point_count(), rng);
    ASSERT_EQ(canonicalize(permute_points(labeled, perm)), canonicalize(labeled)) << "trial " << trial;
  }
}

TEST(Labelings, TriangleExhaustive) {
  LabelingSummary summary;
  const auto all = enumerate_labelings(fixtures::triangle(), ChainLattice{1}, 64, 0, &summary);
  EXPECT_EQ(all.size(), 64u);
  EXPECT_FALSE(summary.sampled);
  EXPECT_EQ(summary.total, 64);
  std::set<std::string> distinct;
  for (const auto& s : all) {
    EXPECT_EQ(s.supports(), fixtures::triangle().supports());
    distinct.insert(serialize_space(s, -1));
  }
  EXPECT_EQ(distinct.size(), 64u);
  // lexicographic: first all a1, last all 1
  EXPECT_EQ(all.front().lines()[0].values[0].rank(), 1u);
  EXPECT_EQ(all.back().lines()[2].values[2].rank(), 2u);
}

TEST(Labelings, CrispLatticeYieldsItself) {
  const auto all = enumerate_labelings(fixtures::near_pencil(5), ChainLattice{0}, 1, 0);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0], fixtures::near_pencil(5));
}

TEST(Labelings, SeededSampleIsDeterministic) {
  LabelingSummary summary;
  const auto a = enumerate_labelings(fixtures::triangle(), ChainLattice{1}, 10, 42, &summary);
  const auto b = enumerate_labelings(fixtures::triangle(), ChainLattice{1}, 10, 42);
  EXPECT_TRUE(summary.sampled);
  EXPECT_EQ(summary.emitted, 10u);
  EXPECT_EQ(a, b);
  std::set<std::string> distinct;
  for (const auto& s : a) distinct.insert(serialize_space(s, -1));
  EXPECT_EQ(distinct.size(), 10u);
  EXPECT_NE(a, enumerate_labelings(fixtures::triangle(), ChainLattice{1}, 10, 43));
}

TEST(Labelings, StreamLengthMatchesCardinality) {
  for (std::size_t v = 3; v <= 5; ++v) {
    for (const auto& s : enumerate_skeletons(v, true)) {
      for (unsigned n = 1; n <= 2; ++n) {
        const auto total = count_k_fuzzy_point_configs(support_sizes(s), ChainLattice{n});
        if (total > 5000) continue;
        const auto summary = for_each_labeling(s, ChainLattice{n}, 5000, 0, [](const FuzzyLinearSpace&) {});
        EXPECT_FALSE(summary.sampled);
        EXPECT_EQ(Count(summary.emitted), total);
      }
    }
  }
}

TEST(Search, IntersectionClauseNeedsAxiomFour) {
  const auto found = search_counterexamples(4, ChainLattice{0}, Clause::kC2);
  ASSERT_EQ(found.found.size(), 1u);
  EXPECT_EQ(canonicalize(found.found[0].skeleton), canonicalize(fixtures::all_pairs(4)));
  EXPECT_EQ(search_counterexamples(4, ChainLattice{0}, Clause::kC2, AxiomSet::with_intersection()).found.size(), 0u);
}

TEST(Search, BGeqVHoldsUpToSix) {
  const auto report = search_counterexamples(6, ChainLattice{0}, Clause::kC1);
  EXPECT_TRUE(report.found.empty());
  EXPECT_EQ(report.skeletons_checked, 1u + 2u + 4u + 9u);
}

TEST(Search, FuzzyLabelingsFailTheSameWay) {
  const auto report = search_counterexamples(4, ChainLattice{1}, Clause::kC2, AxiomSet::linear(), 100, 3);
  ASSERT_EQ(report.found.size(), 1u);
  EXPECT_EQ(report.found[0].labelings_failing, report.found[0].labelings_checked);
  EXPECT_TRUE(report.sampled);
}

TEST(Census, IndependentOfWorkerCount) {
  CensusOptions opt;
  opt.cap = 200;
  opt.seed = 7;
  opt.workers = 1;
  const auto one = census_json(build_census(5, ChainLattice{1}, opt)).dump();
  opt.workers = 4;
  const auto four = census_json(build_census(5, ChainLattice{1}, opt)).dump();
  EXPECT_EQ(one, four);
}

TEST(Census, EntriesCarryVerdictsAndStats) {
  CensusOptions opt;
  opt.cap = 1000;
  const auto census = build_census(4, ChainLattice{1}, opt);
  EXPECT_TRUE(census.cross_check);
  ASSERT_EQ(census.entries.size(), 3u);
  std::size_t excluded = 0;
  for (const auto& e : census.entries) {
    if (!e.verdict) {
      ++excluded;
      EXPECT_NE(e.excluded_reason.find("b = |D| > 1"), std::string::npos);
      continue;
    }
    EXPECT_TRUE(e.labelings.clauses_invariant);
    if (!e.labelings.sampled) {
      EXPECT_EQ(Count(e.labelings.checked), e.labelings.total);
    }
    EXPECT_EQ(e.labeled_count * e.automorphism_count, Count(24));
  }
  EXPECT_EQ(excluded, 1u);
}

}  // namespace
}  // namespace fls
