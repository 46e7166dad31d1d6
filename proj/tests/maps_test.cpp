#include <set>

#include <gtest/gtest.h>

#include <lonely/enumeration.hpp>
#include <lonely/maps.hpp>

namespace lonely {
namespace {

Partition P(const char* text) { return parse_partition(text); }

std::vector<Partition> of_kind(int n, Kind kind) {
  std::vector<Partition> out;
  for_each_noncrossing_partition(n, [&](Partition p) {
    if (classify(p).kind == kind) out.push_back(std::move(p));
  });
  return out;
}

TEST(Maps, Examples) {
  EXPECT_EQ(map_f(P("1,2/3")), P("1,2,4/3"));
  EXPECT_EQ(map_f(P("1/2,4/3")), P("1,5/2,4/3"));
  EXPECT_EQ(map_f(Partition{}), P("1"));
  EXPECT_EQ(map_g(P("1/2,3/4")), P("1/2,3/4/5"));
  EXPECT_EQ(map_g(P("1/2")), P("1/2/3"));
  EXPECT_EQ(map_g(P("1,2/3/4")), P("1,2/3/4/5"));
  EXPECT_TRUE(classify(map_g(P("1,2/3/4"))).marriageable());
  EXPECT_EQ(map_h(P("1,2,3/4")), P("1,2,3/4/5/6"));
  EXPECT_EQ(map_i(P("1,2/3/4")), P("1,2/3/4/5,6"));
  EXPECT_EQ(map_j(P("1,2/3/4")), P("1,2,6/3/4/5"));
  EXPECT_EQ(map_k(P("1,2/3/4")), P("1,2/3/4,5/6"));
  EXPECT_EQ(map_h(Partition{}), P("1/2"));
}

TEST(Maps, RejectOutsideDomain) {
  EXPECT_THROW(map_f(P("1/2")), InvalidArgument);
  EXPECT_THROW(map_g(P("1,2")), InvalidArgument);
  EXPECT_THROW(map_h(P("1,3/2,4")), InvalidArgument);
  EXPECT_THROW(map_i(P("1,2,3/4")), InvalidArgument);
  EXPECT_THROW(map_j(P("1,3/2/4")), InvalidArgument);
  EXPECT_THROW(map_k(Partition{}), InvalidArgument);
}

TEST(Maps, FInjectsLonelyAndMissesTheSplitPartition) {
  for (int n = 0; n <= 8; ++n) {
    std::set<Partition> image;
    for (const auto& p : of_kind(n, Kind::Lonely)) {
      Partition q = map_f(p);
      EXPECT_EQ(classify(q).kind, Kind::Lonely) << p;
      EXPECT_TRUE(image.insert(q).second) << "collision at " << q;
    }
    if (n >= 2) {
      // {[n], {n+1}} is lonely and outside the image.
      Partition::Block whole;
      for (int e = 1; e <= n; ++e) whole.push_back(e);
      Partition split = Partition::from_blocks(n + 1, {whole, {n + 1}});
      EXPECT_EQ(classify(split).kind, Kind::Lonely);
      EXPECT_EQ(image.count(split), 0u) << n;
      EXPECT_LT(image.size(), of_kind(n + 1, Kind::Lonely).size());
    }
  }
}

TEST(Maps, GInjectsMarriageableAndMissesTheTailPair) {
  for (int n = 2; n <= 8; ++n) {
    std::set<Partition> image;
    for (const auto& p : of_kind(n, Kind::Marriageable)) {
      Partition q = map_g(p);
      EXPECT_TRUE(classify(q).marriageable()) << p;
      EXPECT_TRUE(image.insert(q).second) << "collision at " << q;
    }
    if (n >= 3) {
      std::vector<Partition::Block> blocks;
      for (int e = 1; e < n; ++e) blocks.push_back({e});
      blocks.push_back({n, n + 1});
      Partition tail = Partition::from_blocks(n + 1, blocks);
      EXPECT_TRUE(classify(tail).marriageable());
      EXPECT_EQ(image.count(tail), 0u) << n;
    }
  }
}

TEST(Maps, FourMapsHaveDisjointMarriageableImages) {
  for (int n = 0; n <= 7; ++n) {
    std::set<Partition> all;
    std::size_t expected = 0;
    auto absorb = [&](const std::vector<Partition>& domain, Partition (*map)(const Partition&)) {
      for (const auto& p : domain) {
        Partition q = map(p);
        ASSERT_EQ(q.size(), n + 2);
        ASSERT_TRUE(classify(q).marriageable()) << p << " -> " << q;
        ASSERT_TRUE(all.insert(q).second) << "overlap at " << q;
        ++expected;
      }
    };
    absorb(noncrossing_partitions(n), map_h);
    auto married = of_kind(n, Kind::Marriageable);
    absorb(married, map_i);
    absorb(married, map_j);
    absorb(married, map_k);
    EXPECT_EQ(all.size(), expected);
    EXPECT_LE(all.size(), of_kind(n + 2, Kind::Marriageable).size());
  }
}

}  // namespace
}  // namespace lonely
