#include "irank/rank_range.h"

#include <gtest/gtest.h>

#include "builders.h"
#include "irank/linalg.h"
#include "oracles.h"

namespace irank {
namespace {

using testing::IM;
using testing::RM;

TEST(RankRangeTest, PointMatrix) {
  const IntervalMatrix alpha = PointMatrix(RM({{"1", "2", "3"}, {"2", "4", "6"}}));
  const RankRangeReport r = RankRange(alpha);
  EXPECT_EQ(r.max_rank, 1u);
  EXPECT_EQ(r.min_rank_lower, 1u);
  EXPECT_EQ(r.min_rank_upper, 1u);
  EXPECT_TRUE(VerifyRankRangeReport(alpha, r));
}

TEST(RankRangeTest, ForcedZeroRow) {
  const IntervalMatrix alpha = IM({{{"0", "1"}, {"0", "1"}}, {{"0", "0"}, {"0", "0"}}});
  const RankRangeReport r = RankRange(alpha);
  EXPECT_EQ(r.max_rank, 1u);
  EXPECT_EQ(r.min_rank_lower, 0u);
  EXPECT_EQ(r.min_rank_upper, 0u);
  ASSERT_TRUE(r.decided_ranks.count(0));
  ASSERT_TRUE(r.decided_ranks.count(1));
  EXPECT_TRUE(VerifyRankRangeReport(alpha, r));
}

TEST(RankRangeTest, FullRankSquare) {
  const IntervalMatrix alpha = IM({{{"2", "4"}, {"-1", "1"}}, {{"-1", "1"}, {"2", "4"}}});
  const RankRangeReport r = RankRange(alpha);
  EXPECT_EQ(r.max_rank, 2u);
  EXPECT_EQ(r.min_rank_lower, 2u);
  EXPECT_EQ(r.min_rank_upper, 2u);
  EXPECT_TRUE(VerifyRankRangeReport(alpha, r));
}

TEST(RankRangeTest, SpansOneToTwo) {
  const IntervalMatrix alpha = IM({{{"1", "2"}, {"1", "2"}}, {{"1", "2"}, {"1", "2"}}});
  const RankRangeReport r = RankRange(alpha);
  EXPECT_EQ(r.max_rank, 2u);
  EXPECT_EQ(r.min_rank_lower, 1u);
  EXPECT_EQ(r.min_rank_upper, 1u);
  EXPECT_EQ(ExactRank(r.decided_ranks.at(1)), 1u);
  EXPECT_EQ(ExactRank(r.decided_ranks.at(2)), 2u);
}

TEST(RankRangeTest, VerifierRejectsBadReports) {
  const IntervalMatrix alpha = IM({{{"1", "2"}, {"1", "2"}}, {{"1", "2"}, {"1", "2"}}});
  const RankRangeReport good = RankRange(alpha);
  RankRangeReport r = good;
  r.max_rank = 3;
  EXPECT_FALSE(VerifyRankRangeReport(alpha, r));
  r = good;
  r.min_rank_lower = 3;
  EXPECT_FALSE(VerifyRankRangeReport(alpha, r));
  r = good;
  r.decided_ranks[1] = RM({{"1", "2"}, {"2", "1"}});
  EXPECT_FALSE(VerifyRankRangeReport(alpha, r));
  r = good;
  r.decided_ranks[1] = RM({{"3", "3"}, {"3", "3"}});
  EXPECT_FALSE(VerifyRankRangeReport(alpha, r));
  r = good;
  r.decided_ranks.erase(2);
  EXPECT_FALSE(VerifyRankRangeReport(alpha, r));
}

TEST(RankRangePropertyTest, BoundsAgreeWithVertexOracle) {
  oracle::Generator gen(101);
  for (int k = 0; k < 200; ++k) {
    const std::size_t p = static_cast<std::size_t>(gen.Int(1, 3));
    const std::size_t q = static_cast<std::size_t>(gen.Int(1, 3));
    const IntervalMatrix alpha = gen.Matrix(p, q, -3, 3, {1, 2}, 30);
    const RankRangeReport r = RankRange(alpha);
    ASSERT_TRUE(VerifyRankRangeReport(alpha, r));
    ASSERT_EQ(r.max_rank, oracle::VertexMaxRank(alpha));
    for (const auto& [rank, witness] : r.decided_ranks) {
      ASSERT_TRUE(oracle::IsContainedOfRank(alpha, witness, rank));
    }
  }
}

}  // namespace
}  // namespace irank
