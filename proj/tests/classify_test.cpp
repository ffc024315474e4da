#include <gtest/gtest.h>

#include <random>

#include "fls/fixtures.hpp"
#include "test_support.hpp"

namespace fls {
namespace {

// Literal k-fuzzy tests: search for k distinct lines (points) whose meet,
// folded with lattice::meet, is nonzero.
bool literal_k_fuzzy_point(const FuzzyLinearSpace& s, std::size_t x, std::size_t k) {
  if (k == 0) return true;
  bool found = false;
  for_each_subset(PointSet::all(s.line_count()), [&](PointSet lines) {
    if (found || lines.size() != k) return;
    auto m = LatticeElement::top(s.lattice());
    for (auto j : lines.indices()) m = meet(m, s.lines()[j].values[x]);
    found = !m.is_zero();
  });
  return found;
}

bool literal_k_fuzzy_line(const FuzzyLinearSpace& s, std::size_t j, std::size_t k) {
  if (k == 0) return true;
  bool found = false;
  for_each_subset(s.all_points(), [&](PointSet pts) {
    if (found || pts.size() != k) return;
    auto m = LatticeElement::top(s.lattice());
    for (auto i : pts.indices()) m = meet(m, s.lines()[j].values[i]);
    found = !m.is_zero();
  });
  return found;
}

TEST(Classify, XyzTrianglePoints) {
  const auto s = fixtures::xyz_triangle();
  const auto x = *s.find_point("x");
  EXPECT_TRUE(is_k_fuzzy_point(s, x, 2));
  EXPECT_FALSE(is_k_fuzzy_point(s, x, 3));
  EXPECT_TRUE(is_k_fuzzy_point(s, x, 0));
}

TEST(Classify, XyzTriangleLines) {
  const auto s = fixtures::xyz_triangle();
  EXPECT_TRUE(is_k_fuzzy_line(s.lines()[0], 2));
  EXPECT_FALSE(is_k_fuzzy_line(s.lines()[0], 3));
  EXPECT_TRUE(is_k_fuzzy_line(s, 0, 0));
}

TEST(Classify, FanoLinesAreThreeFuzzy) {
  const auto fano = crisp_space(7, testing::cyclic_fano_lines());
  for (std::size_t j = 0; j < fano.line_count(); ++j) {
    EXPECT_TRUE(is_k_fuzzy_line(fano, j, 3));
    EXPECT_FALSE(is_k_fuzzy_line(fano, j, 4));
  }
}

TEST(Classify, Summaries) {
  const auto xyz = summarize(fixtures::xyz_triangle());
  for (const auto& [name, deg] : xyz.per_line_degree) EXPECT_EQ(deg, 2u) << name;
  for (const auto& [name, deg] : xyz.per_point_degree) EXPECT_EQ(deg, 2u) << name;

  const auto np = summarize(fixtures::near_pencil(4));
  std::vector<std::size_t> lines, points;
  for (const auto& [name, deg] : np.per_line_degree) lines.push_back(deg);
  for (const auto& [name, deg] : np.per_point_degree) points.push_back(deg);
  EXPECT_EQ(lines, (std::vector<std::size_t>{3, 2, 2, 2}));
  EXPECT_EQ(points, (std::vector<std::size_t>{2, 2, 2, 3}));
  EXPECT_EQ(np.max_line_k, 3u);
  EXPECT_EQ(np.max_point_k, 3u);

  const auto one = summarize(crisp_space(2, {PointSet::of({0, 1})}));
  EXPECT_EQ(one.max_line_k, 2u);
}

TEST(ClassifyProperty, DegreeShortcutMatchesLiteralMeet) {
  std::mt19937_64 rng(5);
  for (std::size_t v = 3; v <= 5; ++v) {
    for (const auto& skeleton : enumerate_skeletons(v, false)) {
      if (skeleton.line_count() > 8) continue;
      for (unsigned n = 0; n <= 2; ++n) {
        const auto s = testing::random_relabeling(skeleton, ChainLattice{n}, rng);
        for (std::size_t k = 0; k <= s.line_count() + 1; ++k) {
          for (std::size_t x = 0; x < v; ++x) {
            ASSERT_EQ(is_k_fuzzy_point(s, PointId{x}, k), literal_k_fuzzy_point(s, x, k));
          }
        }
        for (std::size_t k = 0; k <= v + 1; ++k) {
          for (std::size_t j = 0; j < s.line_count(); ++j) {
            ASSERT_EQ(is_k_fuzzy_line(s, j, k), literal_k_fuzzy_line(s, j, k));
            if (k > 0 && is_k_fuzzy_line(s, j, k)) {
              EXPECT_TRUE(is_k_fuzzy_line(s, j, k - 1));
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace fls
