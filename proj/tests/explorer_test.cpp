#include "armleg/explorer.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <utility>

namespace armleg {
namespace {

TEST(CanonicalMatching, SmallCases) {
  EXPECT_TRUE(canonical_matching(0).pairs.empty());
  const auto one = canonical_matching(1);
  ASSERT_EQ(one.pairs.size(), 1u);
  EXPECT_EQ(one.pairs[0].first, (CellRef{0, 1, 1}));
  EXPECT_EQ(one.pairs[0].second, (CellRef{0, 1, 1}));

  // n=2: partitions (2) = #0 and (1,1) = #1. The (0,1) group holds #0[1,2]
  // on the source side and #1[1,1] on the target side.
  const auto two = canonical_matching(2);
  ASSERT_EQ(two.pairs.size(), 4u);
  const auto it = std::find_if(two.pairs.begin(), two.pairs.end(),
                               [](const auto& p) {
                                 return p.first == CellRef{0, 1, 2};
                               });
  ASSERT_NE(it, two.pairs.end());
  EXPECT_EQ(it->second, (CellRef{1, 1, 1}));
}

TEST(CanonicalMatching, ValidUpTo15) {
  for (int n = 0; n <= 15; ++n) {
    const auto r = verify_matching(canonical_matching(n));
    EXPECT_TRUE(r.passed()) << r.context();
  }
}

TEST(CanonicalMatching, KeysReproduceMultisets) {
  for (int n = 0; n <= 12; ++n) {
    const auto m = canonical_matching(n);
    const auto partitions = all_partitions(n);
    PairMultiset sources, targets;
    for (const auto& [src, dst] : m.pairs) {
      const auto s = cell_stats(partitions[src.partition_index], {src.row, src.col});
      const auto t = cell_stats(partitions[dst.partition_index], {dst.row, dst.col});
      sources.add(s.arm, s.left);
      targets.add(t.arm, t.leg);
    }
    EXPECT_EQ(sources, build_pair_multiset(n, PairFilling::arm_left));
    EXPECT_EQ(targets, build_pair_multiset(n, PairFilling::arm_leg));
  }
}

TEST(CanonicalMatching, DeterministicAcrossRunsAndWorkers) {
  for (int n : {7, 12}) {
    const auto base = canonical_matching(n, 1);
    EXPECT_EQ(canonical_matching(n, 1), base);
    EXPECT_EQ(canonical_matching(n, 4), base);
  }
}

TEST(VerifyMatching, KeyPreservingSwapStillPasses) {
  auto m = canonical_matching(6);
  // Two pairs whose sources share a key: swapping their targets keeps every
  // statistic transported.
  const auto partitions = all_partitions(6);
  auto key = [&](const CellRef& r) {
    const auto s = cell_stats(partitions[r.partition_index], {r.row, r.col});
    return std::pair{s.arm, s.left};
  };
  bool swapped = false;
  for (std::size_t a = 0; a < m.pairs.size() && !swapped; ++a) {
    for (std::size_t b = a + 1; b < m.pairs.size(); ++b) {
      if (key(m.pairs[a].first) == key(m.pairs[b].first)) {
        std::swap(m.pairs[a].second, m.pairs[b].second);
        swapped = true;
        break;
      }
    }
  }
  ASSERT_TRUE(swapped);
  EXPECT_NE(m, canonical_matching(6));
  EXPECT_TRUE(verify_matching(m).passed());
}

TEST(VerifyMatching, RejectsKeyMismatch) {
  auto m = canonical_matching(2);
  // Send the (0,1) source #0[1,2] to #0[1,1], whose (arm, leg) is (1,0).
  for (auto& [src, dst] : m.pairs) {
    if (src == CellRef{0, 1, 2}) dst = CellRef{0, 1, 1};
  }
  const auto r = verify_matching(m);
  ASSERT_FALSE(r.passed());
  EXPECT_NE(r.first_discrepancy()->where.find("#0[1,2] -> #0[1,1]"),
            std::string::npos);
}

TEST(VerifyMatching, RejectsBrokenBijection) {
  auto dropped = canonical_matching(4);
  dropped.pairs.pop_back();
  EXPECT_FALSE(verify_matching(dropped).passed());

  auto bogus = canonical_matching(3);
  bogus.pairs[0].second = CellRef{0, 5, 5};
  const auto r = verify_matching(bogus);
  ASSERT_FALSE(r.passed());
  EXPECT_NE(r.first_discrepancy()->where.find("not a cell"), std::string::npos);
}

}  // namespace
}  // namespace armleg
