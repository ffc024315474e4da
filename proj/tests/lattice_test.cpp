#include <gtest/gtest.h>

#include "fls/lattice.hpp"

namespace fls {
namespace {

TEST(Lattice, SizesFollowIntermediateCount) {
  const ChainLattice l3{3};
  EXPECT_EQ(l3.size(), 5u);
  EXPECT_EQ(l3.nonzero_count(), 4u);
  EXPECT_EQ(l3.top_rank(), 4u);
  EXPECT_TRUE(ChainLattice{0}.is_crisp());
  EXPECT_EQ(ChainLattice{0}.size(), 2u);
}

TEST(Lattice, MeetIsMinimum) {
  const ChainLattice l1{1}, l3{3};
  EXPECT_EQ(meet(LatticeElement(1, l1), LatticeElement::top(l1)).rank(), 1u);
  EXPECT_EQ(meet(LatticeElement::bottom(l1), LatticeElement::top(l1)).rank(), 0u);
  EXPECT_EQ(meet(LatticeElement(2, l3), LatticeElement(3, l3)).rank(), 2u);
}

TEST(Lattice, JoinIsMaximum) {
  const ChainLattice l1{1}, l3{3};
  EXPECT_TRUE(join(LatticeElement(1, l1), LatticeElement::top(l1)).is_top());
  EXPECT_EQ(join(LatticeElement::bottom(l1), LatticeElement(1, l1)).rank(), 1u);
  EXPECT_EQ(join(LatticeElement(2, l3), LatticeElement(3, l3)).rank(), 3u);
}

TEST(Lattice, MixedOperandsRejected) {
  const LatticeElement a(1, ChainLattice{1});
  const LatticeElement b(1, ChainLattice{2});
  EXPECT_THROW(meet(a, b), std::invalid_argument);
  EXPECT_THROW(join(a, b), std::invalid_argument);
}

TEST(Lattice, RankOutOfRangeRejected) {
  EXPECT_THROW(LatticeElement(3, ChainLattice{1}), std::out_of_range);
  EXPECT_NO_THROW(LatticeElement(2, ChainLattice{1}));
}

TEST(Lattice, ParseTokens) {
  const ChainLattice l1{1};
  EXPECT_EQ(parse_token("a1", l1).rank(), 1u);
  EXPECT_EQ(parse_token("1", l1).rank(), 2u);
  EXPECT_EQ(parse_token("0", l1).rank(), 0u);
  EXPECT_EQ(parse_token("1", ChainLattice{0}).rank(), 1u);
  for (const char* bad : {"a2", "a0", "a01", "A1", "a", "2", "", " 1", "a1 ", "-1", "b1"}) {
    EXPECT_THROW(parse_token(bad, l1), ParseError) << bad;
  }
}

TEST(Lattice, ParseErrorNamesToken) {
  try {
    parse_token("a2", ChainLattice{1});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("a2"), std::string::npos);
  }
}

TEST(LatticeProperty, TokenRoundTrip) {
  for (unsigned n = 0; n <= 12; ++n) {
    const ChainLattice lat{n};
    for (unsigned r = 0; r <= lat.top_rank(); ++r) {
      const auto token = format_token(r, lat);
      EXPECT_EQ(parse_token(token, lat).rank(), r);
      EXPECT_EQ(format_token(parse_token(token, lat)), token);
    }
  }
}

TEST(LatticeProperty, MeetJoinLawsOnAllTriples) {
  for (unsigned n = 0; n <= 4; ++n) {
    const ChainLattice lat{n};
    for (unsigned a = 0; a <= lat.top_rank(); ++a) {
      const LatticeElement x(a, lat);
      EXPECT_EQ(meet(x, x), x);
      EXPECT_EQ(join(x, x), x);
      for (unsigned b = 0; b <= lat.top_rank(); ++b) {
        const LatticeElement y(b, lat);
        EXPECT_EQ(meet(x, y), meet(y, x));
        EXPECT_EQ(join(x, y), join(y, x));
        EXPECT_EQ(meet(x, y).is_zero(), x.is_zero() || y.is_zero());
        EXPECT_EQ(meet(x, join(x, y)), x);
        for (unsigned c = 0; c <= lat.top_rank(); ++c) {
          const LatticeElement z(c, lat);
          EXPECT_EQ(meet(meet(x, y), z), meet(x, meet(y, z)));
          EXPECT_EQ(join(join(x, y), z), join(x, join(y, z)));
        }
      }
    }
  }
}

}  // namespace
}  // namespace fls
