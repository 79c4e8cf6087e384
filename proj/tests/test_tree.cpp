#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fibquiver/errors.hpp"
#include "fibquiver/tree.hpp"

namespace fq = fibquiver;
using fq::VertexId;

namespace {

VertexId v(const char* s) { return VertexId::parse(s); }

VertexId random_vertex(std::mt19937_64& rng, int max_depth) {
  std::uniform_int_distribution<int> depth(0, max_depth);
  std::uniform_int_distribution<int> first(0, 2), later(0, 1);
  VertexId out;
  const int d = depth(rng);
  for (int i = 0; i < d; ++i) out = out.child(i == 0 ? first(rng) : later(rng));
  return out;
}

}  // namespace

TEST(VertexId, ParsingAndNames) {
  EXPECT_TRUE(v("").is_base());
  EXPECT_TRUE(v("base").is_base());
  EXPECT_TRUE(v(".").is_base());
  EXPECT_EQ(v("201").depth(), 3u);
  EXPECT_EQ(v("201").to_string(), "201");
  EXPECT_EQ(VertexId::base().to_string(), "base");
  EXPECT_EQ(v("201").parent(), v("20"));
  EXPECT_EQ(v("2").child(1), v("21"));
  EXPECT_THROW(v("22"), std::invalid_argument);
  EXPECT_THROW(v("3"), std::invalid_argument);
  EXPECT_THROW(v("0x"), std::invalid_argument);
}

TEST(Neighbors, BaseAndInnerVertices) {
  const auto nb = fq::neighbors(VertexId::base());
  EXPECT_EQ(nb[0], v("0"));
  EXPECT_EQ(nb[1], v("1"));
  EXPECT_EQ(nb[2], v("2"));
  const auto inner = fq::neighbors(v("10"));
  EXPECT_EQ(inner[0], v("1"));
  EXPECT_EQ(inner[1], v("100"));
  EXPECT_EQ(inner[2], v("101"));
  EXPECT_TRUE(fq::are_neighbors(v("1"), v("10")));
  EXPECT_FALSE(fq::are_neighbors(v("1"), v("2")));
}

TEST(Distance, MetricProperties) {
  EXPECT_EQ(fq::distance(v("0"), v("1")), 2u);
  EXPECT_EQ(fq::distance(v("01"), v("010")), 1u);
  EXPECT_EQ(fq::distance(v("011"), v("20")), 5u);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_vertex(rng, 7), b = random_vertex(rng, 7), c = random_vertex(rng, 7);
    ASSERT_EQ(fq::distance(a, b), fq::distance(b, a));
    ASSERT_LE(fq::distance(a, c), fq::distance(a, b) + fq::distance(b, c));
    const auto path = fq::tree_path(a, b);
    ASSERT_EQ(path.size(), fq::distance(a, b) + 1);
    ASSERT_EQ(path.front(), a);
    ASSERT_EQ(path.back(), b);
    for (std::size_t k = 1; k < path.size(); ++k) ASSERT_TRUE(fq::are_neighbors(path[k - 1], path[k]));
  }
}

TEST(Ball, SizesMatchShellCounts) {
  for (int r = 0; r <= 10; ++r) {
    const auto b = fq::ball(v("01"), r);
    const std::size_t expected = r == 0 ? 1 : 1 + 3 * ((std::size_t{1} << r) - 1);
    ASSERT_EQ(b.size(), expected) << r;
    std::set<VertexId> distinct(b.begin(), b.end());
    ASSERT_EQ(distinct.size(), b.size());
    for (const auto& z : b) ASSERT_LE(fq::distance(z, v("01")), static_cast<std::size_t>(r));
  }
}

TEST(Ball, CapIsEnforced) {
  EXPECT_THROW(fq::ball(VertexId::base(), 5, 4), fq::RadiusTooLarge);
  EXPECT_NO_THROW(fq::ball(VertexId::base(), 4, 4));
}

TEST(SideCounts, PowersOfTwoAndBruteForce) {
  for (int s = 1; s <= 8; ++s) {
    const auto c = fq::side_counts(v("1"), v("10"), s);
    EXPECT_EQ(c.away, fq::pow2(s));
    EXPECT_EQ(c.through, fq::pow2(s - 1));
    fq::BigInt away = 0, through = 0;
    for (const auto& z : fq::ball(v("1"), s)) {
      if (fq::distance(z, v("1")) != static_cast<std::size_t>(s)) continue;
      (fq::distance(z, v("10")) < static_cast<std::size_t>(s) ? through : away) += 1;
    }
    EXPECT_EQ(c.away, away) << s;
    EXPECT_EQ(c.through, through) << s;
  }
  EXPECT_THROW(fq::side_counts(v("1"), v("2"), 3), fq::NotNeighbors);
}

TEST(Orientation, BipartiteAndConsistent) {
  const fq::Orientation o{VertexId::base(), fq::Parity::even};
  EXPECT_TRUE(o.is_sink(VertexId::base()));
  EXPECT_FALSE(o.is_sink(v("0")));
  EXPECT_TRUE(o.is_sink(v("01")));
  EXPECT_TRUE(o.same_as({v("2"), fq::Parity::odd}));
  EXPECT_FALSE(o.same_as({v("2"), fq::Parity::even}));
}

TEST(Rerooting, RoundTripAndIsometry) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    const auto root = random_vertex(rng, 5);
    const auto a = random_vertex(rng, 6), b = random_vertex(rng, 6);
    const auto la = fq::relative_to(a, root);
    ASSERT_EQ(fq::absolute_from(la, root), a);
    ASSERT_EQ(fq::distance(la, VertexId::base()), fq::distance(a, root));
    ASSERT_EQ(fq::distance(la, fq::relative_to(b, root)), fq::distance(a, b));
  }
  EXPECT_TRUE(fq::relative_to(v("21"), v("21")).is_base());
  // The step back towards the canonical base carries the root's first letter.
  EXPECT_EQ(fq::relative_to(VertexId::base(), v("0")), v("0"));
  EXPECT_EQ(fq::relative_to(VertexId::base(), v("2")), v("2"));
}
