#include <gtest/gtest.h>

#include "wpo/enumerate.hpp"
#include "wpo/linearize.hpp"
#include "wpo/ordinal_io.hpp"
#include "wpo/text.hpp"

namespace {

using wpo::closure;
using wpo::Ordinal;

std::string S(const Ordinal& a) { return wpo::format_ordinal(a); }

TEST(OrdVec, Examples) {
  EXPECT_EQ(S(wpo::ord_vec({2, 1})), "w*2+1");
  EXPECT_TRUE(wpo::ord_vec({}).is_zero());
  EXPECT_EQ(wpo::ord_vec({0, 0, 5}), Ordinal(5));
  EXPECT_EQ(S(wpo::ord_vec({1, 0, 3, 0})), "w^3+w*3");
}

TEST(OrdVec, IsLexicographic) {
  const auto pts = wpo::detail::box_points({3, 3, 3});
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LT(wpo::ord_vec(pts[i - 1]), wpo::ord_vec(pts[i]));
}

TEST(Ord, Examples) {
  EXPECT_TRUE(wpo::ord(wpo::FiniteLowerSet(2)).is_zero());
  EXPECT_EQ(wpo::ord(closure({{0, 0, 0}}, 3)), Ordinal(1));
  EXPECT_EQ(S(wpo::ord(closure({{1, 2}, {0, 3}}, 2))), "w*2+3");
  EXPECT_THROW(wpo::ord_lowerset(wpo::FiniteLowerSet(0)), std::invalid_argument);
}

TEST(Ord, TermBreakdown) {
  auto a = wpo::ord_lowerset(closure({{1, 2}, {0, 3}}, 2));
  ASSERT_EQ(a.terms.size(), 2u);
  EXPECT_EQ(S(a.terms[0].term), "3");
  EXPECT_EQ(S(a.terms[1].term), "w*2");
}

TEST(Ord, TieInTheQuadrant) {
  EXPECT_EQ(wpo::ord(closure({{0, 1}}, 2)), Ordinal(2));
  EXPECT_EQ(wpo::ord(closure({{0, 1}, {1, 0}}, 2)), Ordinal(2));
}

TEST(Ord, OneDimensionCountsPoints) {
  for (const auto& f : wpo::enumerate_fls({6})) {
    const std::uint64_t count = f.empty() ? 0 : f.generators()[0][0] + 1;
    EXPECT_EQ(wpo::ord(f), Ordinal(count));
  }
}

TEST(Monotone, Box4x4) {
  auto rep = wpo::check_monotone({4, 4});
  EXPECT_EQ(rep.sets, 70u);
  EXPECT_EQ(rep.pairs, 4900u);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.comparable, 70u);
}

TEST(Monotone, Box3x3x3) {
  auto rep = wpo::check_monotone({3, 3, 3});
  EXPECT_EQ(rep.sets, 980u);
  EXPECT_TRUE(rep.ok());
}

TEST(Monotone, Box5InOneDimension) {
  auto rep = wpo::check_monotone({5});
  EXPECT_EQ(rep.sets, 6u);
  EXPECT_TRUE(rep.ok());
}

TEST(Ord, StaysBelowTheType) {
  for (const auto& box : {std::vector<wpo::Coord>{4, 4}, std::vector<wpo::Coord>{3, 3, 3}}) {
    const auto ceiling = wpo::type_of_D(box.size());
    for (const auto& f : wpo::enumerate_fls(box)) EXPECT_LT(wpo::ord(f), ceiling) << wpo::to_text(f);
  }
}

}  // namespace
