#include <gtest/gtest.h>

#include "lgschub/indexcomb.hpp"

using namespace lgschub;

namespace {
StrictPartition S(int n, std::vector<int> p) { return StrictPartition(n, std::move(p)); }
}  // namespace

TEST(Enumerate, Examples) {
  auto e1 = enumerate(1);
  ASSERT_EQ(e1.size(), 2u);
  EXPECT_TRUE(e1[0].empty());
  EXPECT_EQ(e1[1], S(1, {1}));
  auto e2 = enumerate(2);
  std::vector<StrictPartition> want = {S(2, {}), S(2, {1}), S(2, {2}), S(2, {2, 1})};
  EXPECT_EQ(e2, want);
  EXPECT_EQ(enumerate(5).size(), 32u);
}

TEST(Enumerate, OrderIsLinearExtensionOfContainment) {
  for (int n = 1; n <= 6; ++n) {
    auto e = enumerate(n);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(contains(e[i], e[j]) && !(e[i] == e[j]));
  }
  auto e3 = enumerate(3);
  EXPECT_EQ(e3[3], S(3, {3}));
  EXPECT_EQ(e3[4], S(3, {2, 1}));
}

TEST(Bijection, FiveExample) {
  SignedPerm w(5, {1, 3, 4, 6, 9});
  auto d = perm_to_diagram(w);
  EXPECT_EQ(d.rows, (std::vector<int>{5, 4, 4, 3, 1}));
  EXPECT_EQ(diagram_to_strict(d), S(5, {5, 3, 2}));
  EXPECT_EQ(perm_to_mask(w).bits, (std::vector<int>{1, 0, 1, 1, 0}));
  EXPECT_EQ(w.barred(), "1 3 4 5̄ 2̄");
}

TEST(Bijection, SmallMasks) {
  EXPECT_EQ(strict_to_mask(S(2, {2})).bits, (std::vector<int>{1, 0}));
  EXPECT_EQ(strict_to_mask(S(2, {1})).bits, (std::vector<int>{0, 1}));
  EXPECT_EQ(strict_to_perm(S(2, {2})), SignedPerm(2, {1, 3}));
  EXPECT_EQ(strict_to_mask(S(3, {})).bits, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(strict_to_mask(S(3, {3, 2, 1})).bits, (std::vector<int>{1, 1, 1}));
}

TEST(Bijection, RoundTripsUpTo8) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : enumerate(n)) {
      auto w = strict_to_perm(l);
      auto d = strict_to_diagram(l);
      auto m = strict_to_mask(l);
      EXPECT_EQ(perm_to_strict(w), l);
      EXPECT_EQ(diagram_to_strict(d), l);
      EXPECT_EQ(mask_to_strict(m), l);
      EXPECT_EQ(mask_to_perm(perm_to_mask(w)), w);
      EXPECT_EQ(diagram_to_perm(perm_to_diagram(w)), w);
      EXPECT_EQ(mask_to_diagram(diagram_to_mask(d)), d);
      EXPECT_EQ(d.shifted_box_count(), l.size());
    }
}

TEST(Validation, RejectsBadObjects) {
  EXPECT_THROW(S(3, {2, 2}), InvalidIndexObject);
  EXPECT_THROW(S(3, {1, 2}), InvalidIndexObject);
  EXPECT_THROW(S(2, {3}), InvalidIndexObject);
  EXPECT_THROW(S(0, {}), InvalidIndexObject);
  EXPECT_THROW(SignedPerm(3, {1, 2}), InvalidIndexObject);
  EXPECT_THROW(SignedPerm(3, {1, 3, 2}), InvalidIndexObject);
  EXPECT_THROW(SignedPerm(3, {1, 2, 5}), InvalidIndexObject);  // 2 and its bar
  EXPECT_THROW(SignedPerm(2, {1, 5}), InvalidIndexObject);
  EXPECT_THROW(BitMask({0, 2}), InvalidIndexObject);
  EXPECT_THROW(SymDiagram({2, 0}), InvalidIndexObject);
  EXPECT_THROW(SymDiagram({1, 2}), InvalidIndexObject);
  EXPECT_THROW(contains(S(2, {1}), S(3, {1})), InvalidIndexObject);
  EXPECT_EQ(S(3, {2, 0}), S(3, {2}));
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(S(2, {2}), S(2, {2, 1})));
  EXPECT_FALSE(contains(S(2, {2}), S(2, {1})));
  for (const auto& m : enumerate(3)) EXPECT_TRUE(contains(S(3, {}), m));
}

TEST(Covers, Examples) {
  auto c0 = covers(S(2, {}));
  ASSERT_EQ(c0.size(), 1u);
  EXPECT_EQ(c0[0].target, S(2, {1}));
  EXPECT_EQ(c0[0].multiplicity, 1);
  auto c1 = covers(S(2, {1}));
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0].target, S(2, {2}));
  EXPECT_EQ(c1[0].multiplicity, 2);
  auto c2 = covers(S(3, {2}));
  ASSERT_EQ(c2.size(), 2u);
  EXPECT_EQ(c2[0].target, S(3, {3}));
  EXPECT_EQ(c2[0].multiplicity, 2);
  EXPECT_EQ(c2[1].target, S(3, {2, 1}));
  EXPECT_EQ(c2[1].multiplicity, 1);
  EXPECT_TRUE(covers(S(3, {3, 2, 1})).empty());
}

TEST(Covers, CompleteAndMatchDiagramMoves) {
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate(n);
    for (const auto& l : all) {
      auto cov = covers(l);
      std::size_t count = 0;
      for (const auto& lp : all)
        if (lp.size() == l.size() + 1 && contains(l, lp)) ++count;
      EXPECT_EQ(cov.size(), count);
      EXPECT_EQ(cov.empty(), l.size() == n * (n + 1) / 2);
      for (const auto& c : cov) {
        EXPECT_TRUE(contains(l, c.target));
        EXPECT_EQ(c.target.size(), l.size() + 1);
        EXPECT_EQ(diagram_move_multiplicity(l, c.target), c.multiplicity);
      }
    }
  }
}
