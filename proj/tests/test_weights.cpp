#include <gtest/gtest.h>

#include <set>

#include "wzw/weights.hpp"

using namespace wzw;

namespace {

const std::vector<std::pair<int, int>> kSmallGrid = {{2, 1}, {2, 2}, {2, 7}, {3, 1}, {3, 2}, {3, 5}, {4, 3}, {4, 4}, {5, 3}};

}  // namespace

TEST(Alcove, SizesMatchBinomial) {
  EXPECT_EQ(TheoryParams(2, 2).size(), 3u);
  EXPECT_EQ(TheoryParams(3, 1).size(), 3u);
  EXPECT_EQ(TheoryParams(3, 2).size(), 6u);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 8; ++k) {
      EXPECT_EQ(static_cast<long>(TheoryParams(n, k).size()), binomial(k + n - 1, n - 1)) << n << "," << k;
    }
  }
}

TEST(Alcove, LexicographicWithVacuumFirst) {
  const TheoryParams tp(2, 2);
  EXPECT_EQ(tp[0], Weight({0}));
  EXPECT_EQ(tp[1], Weight({1}));
  EXPECT_EQ(tp[2], Weight({2}));
  const TheoryParams t3(3, 1);
  EXPECT_EQ(t3.alcove(), (std::vector<Weight>{Weight({0, 0}), Weight({0, 1}), Weight({1, 0})}));
  for (const auto& [n, k] : kSmallGrid) {
    const TheoryParams tp2(n, k);
    EXPECT_EQ(tp2[0], tp2.vacuum());
    EXPECT_TRUE(std::is_sorted(tp2.alcove().begin(), tp2.alcove().end()));
    for (std::size_t i = 0; i < tp2.size(); ++i) EXPECT_EQ(tp2.index(tp2[i]), i);
  }
}

TEST(Alcove, RejectsInvalidRankAndLevel) {
  EXPECT_THROW(TheoryParams(1, 3), ValidationError);
  EXPECT_THROW(TheoryParams(3, 0), ValidationError);
  EXPECT_THROW(TheoryParams(2, -1), ValidationError);
}

TEST(Alcove, IndexRejectsOutsideWeights) {
  const TheoryParams tp(3, 2);
  EXPECT_THROW(tp.index(Weight({2, 1})), ValidationError);
  EXPECT_THROW(tp.index(Weight({1, 0, 0})), ValidationError);
  EXPECT_THROW(tp.parse("1,x"), ValidationError);
  EXPECT_THROW(tp.parse("1,"), ValidationError);
  EXPECT_THROW(tp.parse("-1,0"), ValidationError);
  EXPECT_THROW(tp.parse("1"), ValidationError);
  EXPECT_EQ(tp.parse("1,1"), Weight({1, 1}));
}

TEST(Color, NamedWeights) {
  for (const auto& [n, k] : kSmallGrid) {
    const TheoryParams tp(n, k);
    EXPECT_EQ(tp.color(tp.v()), 1 % n);
    EXPECT_EQ(tp.color(tp.vacuum()), 0);
    EXPECT_EQ(tp.color(tp.v0()), 0);
  }
  // u = (n'+1, n', ..., n') has color 1 at k = n' n
  for (const auto& [n, nprime] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {4, 4}, {3, 5}}) {
    const TheoryParams tp(n, n * nprime);
    std::vector<int> l(static_cast<std::size_t>(n - 1), nprime);
    l[0] += 1;
    EXPECT_EQ(tp.color(Weight(l)), 1);
  }
}

TEST(Omega, SimpleCurrentExamples) {
  const TheoryParams tp(2, 8);
  EXPECT_EQ(tp.omega(Weight({5}), 1), Weight({3}));
  const TheoryParams t4(4, 5);
  EXPECT_EQ(t4.omega(t4.vacuum(), 1), Weight({5, 0, 0}));
  for (int i = 1; i < 4; ++i) EXPECT_EQ(t4.omega(t4.vacuum(), i), Weight::fundamental(4, i, 5));
  EXPECT_EQ(t4.omega(Weight({1, 2, 0}), -1), t4.omega(Weight({1, 2, 0}), 3));
}

TEST(Omega, GroupActionProperties) {
  for (const auto& [n, k] : kSmallGrid) {
    const TheoryParams tp(n, k);
    for (int i = 0; i <= n; ++i) {
      std::set<Weight> image;
      for (const Weight& w : tp.alcove()) {
        const Weight x = tp.omega(w, i);
        ASSERT_TRUE(tp.contains(x));
        image.insert(x);
        EXPECT_EQ(tp.color(x), ((tp.color(w) + i * k) % n + n) % n);
        EXPECT_EQ(tp.omega(tp.omega(w, i), n - i), w);
      }
      EXPECT_EQ(image.size(), tp.size()) << "omega^" << i << " is a bijection";
    }
    for (const Weight& w : tp.alcove()) EXPECT_EQ(tp.omega(w, n), w);
  }
}

TEST(Conjugate, ReversesLabels) {
  const TheoryParams tp(5, 3);
  EXPECT_EQ(conjugate(tp.v()), Weight({0, 0, 0, 1}));
  EXPECT_EQ(conjugate(tp.v0()), tp.v0());
  EXPECT_EQ(conjugate(tp.vacuum()), tp.vacuum());
  for (const Weight& w : tp.alcove()) {
    EXPECT_EQ(conjugate(conjugate(w)), w);
    EXPECT_TRUE(tp.contains(conjugate(w)));
    EXPECT_EQ((tp.color(w) + tp.color(conjugate(w))) % 5, 0);
  }
}

TEST(Partition, Examples) {
  EXPECT_EQ(to_partition(Weight({1, 1})).rows, (std::vector<int>{2, 1}));
  EXPECT_EQ(from_partition(Partition{{1, 1, 1}}, 3), Weight({0, 0}));
  EXPECT_EQ(to_partition(Weight({3})).rows, (std::vector<int>{3}));
  EXPECT_EQ(to_partition(Weight({0, 0})).rows, std::vector<int>{});
  EXPECT_EQ(from_partition(Partition{{4, 2, 2}}, 3), Weight({2, 0}));
}

TEST(Partition, RejectsBadShapes) {
  EXPECT_THROW(from_partition(Partition{{1, 2}}, 3), ValidationError);
  EXPECT_THROW(from_partition(Partition{{3, 2, 1, 1}}, 3), ValidationError);
  EXPECT_THROW(from_partition(Partition{{2, -1}}, 3), ValidationError);
}

TEST(Partition, RoundTripsEveryAlcoveWeight) {
  for (const auto& [n, k] : kSmallGrid) {
    const TheoryParams tp(n, k);
    for (const Weight& w : tp.alcove()) {
      EXPECT_EQ(from_partition(to_partition(w), n), w);
      // adding a full column of height n does not change the weight
      Partition p = to_partition(w);
      p.rows.resize(static_cast<std::size_t>(n), 0);
      for (int& r : p.rows) r += 1;
      EXPECT_EQ(from_partition(p, n), w);
    }
  }
}

TEST(WeightText, ParsesAndPrints) {
  EXPECT_EQ(Weight::parse("1,0,2").str(), "1,0,2");
  EXPECT_EQ(Weight::parse("12").labels(), std::vector<int>{12});
  EXPECT_THROW(Weight::parse(""), ValidationError);
  EXPECT_THROW(Weight::parse("1,,2"), ValidationError);
  EXPECT_THROW(Weight::parse("1 ,2"), ValidationError);
  EXPECT_THROW(Weight({1, -2}), ValidationError);
}
