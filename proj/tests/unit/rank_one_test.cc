#include "irank/rank_one.h"

#include <gtest/gtest.h>

#include "builders.h"
#include "irank/errors.h"
#include "irank/linalg.h"
#include "oracles.h"

namespace irank {
namespace {

using testing::IM;
using testing::RM;
using testing::RV;

const IntervalMatrix kContradiction =
    IM({{{"2", "3"}, {"0", "1"}}, {{"0", "1"}, {"2", "3"}}});
const IntervalMatrix kFeasible = IM({{{"1", "2"}, {"2", "4"}}, {{"3", "6"}, {"6", "7"}}});

Budgets WithHCap(std::uint64_t cap) {
  Budgets b;
  b.h_cap = cap;
  return b;
}

TEST(CriterionTest, ProductContradiction) {
  const CriterionResult r = RankOneCriterionBruteForce(kContradiction);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.violation.has_value());
  EXPECT_EQ(r.violation->h(), 2u);
  EXPECT_EQ(r.violation->lower_product, Rational(4));
  EXPECT_EQ(r.violation->upper_product, Rational(1));
  EXPECT_TRUE(VerifyViolation(kContradiction, *r.violation));
}

TEST(CriterionTest, HoldsExamples) {
  EXPECT_TRUE(RankOneCriterionBruteForce(
                  IM({{{"1", "2"}, {"1", "2"}}, {{"1", "2"}, {"1", "2"}}}))
                  .holds);
  EXPECT_TRUE(RankOneCriterionBruteForce(kFeasible).holds);
}

TEST(CriterionTest, Preconditions) {
  EXPECT_THROW(RankOneCriterionBruteForce(IM({{{"1", "2"}, {"1", "2"}}})), PreconditionError);
  EXPECT_THROW(RankOneCriterionBruteForce(
                   IM({{{"-1", "2"}, {"1", "2"}}, {{"1", "2"}, {"1", "2"}}})),
               PreconditionError);
  EXPECT_THROW(RankOneCriterionBruteForce(
                   IM({{{"0", "2"}, {"0", "2"}}, {{"1", "2"}, {"1", "2"}}})),
               PreconditionError);
  // min(p,q) = 3 needs h up to 4.
  const IntervalMatrix three(3, 3, Interval(Rational(1), Rational(2)));
  EXPECT_THROW(RankOneCriterionBruteForce(three, WithHCap(2)), SizeLimitExceededError);
  EXPECT_TRUE(RankOneCriterionBruteForce(three, WithHCap(4)).holds);
}

TEST(FeasibilityTest, HandBuiltWitness) {
  const FeasibilityResult r = RankOneFeasibilityWitness(kFeasible);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(VerifyRankOneWitness(kFeasible, *r.witness));
  // A hand-built witness is also valid.
  EXPECT_TRUE(VerifyRankOneWitness(kFeasible, RankOneWitness{RV({"1", "3"}), RV({"3/2", "2"})}));
}

TEST(FeasibilityTest, ContradictionGivesViolation) {
  const FeasibilityResult r = RankOneFeasibilityWitness(kContradiction);
  EXPECT_FALSE(r.witness.has_value());
  ASSERT_TRUE(r.violation.has_value());
  EXPECT_TRUE(VerifyViolation(kContradiction, *r.violation));
  EXPECT_EQ(r.violation->lower_product, Rational(4));
  EXPECT_EQ(r.violation->upper_product, Rational(1));
}

TEST(FeasibilityTest, PointMatrixOfOnes) {
  const IntervalMatrix ones(2, 3, Interval(Rational(1), Rational(1)));
  const FeasibilityResult r = RankOneFeasibilityWitness(ones);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->Outer(), RationalMatrix(2, 3, Rational(1)));
}

TEST(FeasibilityTest, ZeroEntryIsRejected) {
  const IntervalMatrix alpha = IM({{{"1", "2"}, {"0", "0"}}, {{"1", "2"}, {"1", "2"}}});
  const FeasibilityResult r = RankOneFeasibilityWitness(alpha);
  ASSERT_TRUE(r.violation.has_value());
  EXPECT_EQ(r.violation->h(), 2u);
  EXPECT_TRUE(VerifyViolation(alpha, *r.violation));
}

TEST(RankOneAnyTest, AllZero) {
  const RankOneAnalysis a = RankOneAny(IntervalMatrix(2, 2, Interval(Rational(0), Rational(0))));
  EXPECT_FALSE(a.exists);
  EXPECT_TRUE(a.all_zero);
}

TEST(RankOneAnyTest, MixedSigns) {
  const IntervalMatrix alpha = IM({{{"-2", "-1"}, {"1", "2"}}, {{"1", "2"}, {"-2", "-1"}}});
  const RankOneAnalysis a = RankOneAny(alpha);
  ASSERT_TRUE(a.exists);
  EXPECT_TRUE(VerifyRankOneWitness(alpha, *a.witness));
  const RationalMatrix b = a.witness->Outer();
  EXPECT_LT(b(0, 0), Rational(0));
}

TEST(RankOneAnyTest, SingleEntry) {
  const RankOneAnalysis a = RankOneAny(IM({{{"0", "5"}}}));
  ASSERT_TRUE(a.exists);
  EXPECT_EQ(a.witness->Outer(), RM({{"3"}}));
}

TEST(RankOneAnyTest, ThinReducedMatrix) {
  const IntervalMatrix alpha = IM({{{"0", "1"}, {"-1", "1"}, {"0", "0"}},
                                   {{"1", "2"}, {"-3", "-2"}, {"0", "4"}}});
  const RankOneAnalysis a = RankOneAny(alpha);
  ASSERT_TRUE(a.exists);
  EXPECT_TRUE(VerifyRankOneWitness(alpha, *a.witness));
}

TEST(RankOneAnyTest, RefutesEveryBranch) {
  const RankOneAnalysis a = RankOneAny(kContradiction);
  EXPECT_FALSE(a.exists);
  ASSERT_EQ(a.refutations.size(), 1u);
  ASSERT_TRUE(a.refutations[0].violation.has_value());
  const IntervalMatrix straddling = IM({{{"2", "3"}, {"-1", "1"}}, {{"-1", "1"}, {"2", "3"}}});
  // a d >= 4 > b c on every member.
  const RankOneAnalysis b = RankOneAny(straddling);
  EXPECT_FALSE(b.exists);
  EXPECT_EQ(b.branch_count, 4u);
  ASSERT_EQ(b.refutations.size(), 4u);
  for (const BranchRefutation& r : b.refutations) {
    EXPECT_TRUE(r.negative_cell.has_value() || r.violation.has_value());
  }
}

TEST(RankOneAnyTest, BranchBudget) {
  IntervalMatrix alpha(3, 3, Interval(Rational(-1), Rational(1)));
  alpha(0, 0) = Interval(Rational(1), Rational(1));
  alpha(1, 1) = Interval(Rational(1), Rational(1));
  alpha(2, 2) = Interval(Rational(1), Rational(1));
  Budgets tight;
  tight.branch_limit = 8;
  EXPECT_THROW(RankOneAny(alpha, tight), SizeLimitExceededError);
}

TEST(SimplestNonzeroTest, Examples) {
  EXPECT_EQ(SimplestNonzero(Interval(Rational(0), Rational(5))), Rational(3));
  EXPECT_EQ(SimplestNonzero(Interval(Rational(-4), Rational(0))), Rational(-2));
  EXPECT_EQ(SimplestNonzero(Interval(Rational(2), Rational(3))), Rational(2));
  EXPECT_FALSE(SimplestNonzero(Interval(Rational(-1), Rational(1))).is_zero());
}

IntervalMatrix RandomReducedNonnegative(oracle::Generator& gen, std::size_t p, std::size_t q) {
  while (true) {
    IntervalMatrix alpha(p, q);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        alpha(i, j) = gen.IntervalFrom(0, 6, {1, 2}, 25);
      }
    }
    if (IsReduced(alpha)) return alpha;
  }
}

TEST(RankOnePropertyTest, CriterionMatchesFeasibility) {
  oracle::Generator gen(53);
  int holds = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t p = static_cast<std::size_t>(gen.Int(2, 3));
    const std::size_t q = static_cast<std::size_t>(gen.Int(2, 3));
    const IntervalMatrix alpha = RandomReducedNonnegative(gen, p, q);
    const CriterionResult c = RankOneCriterionBruteForce(alpha);
    const FeasibilityResult f = RankOneFeasibilityWitness(alpha);
    ASSERT_EQ(c.holds, f.witness.has_value()) << "instance " << k;
    if (f.witness) {
      ASSERT_TRUE(oracle::IsContainedOfRank(alpha, f.witness->Outer(), 1));
      ++holds;
    } else {
      ASSERT_TRUE(VerifyViolation(alpha, *c.violation));
      ASSERT_TRUE(VerifyViolation(alpha, *f.violation));
    }
  }
  EXPECT_GT(holds, 20);
  EXPECT_LT(holds, 280);
}

TEST(RankOnePropertyTest, EnlargingAnEntryKeepsExistence) {
  oracle::Generator gen(59);
  for (int k = 0; k < 200; ++k) {
    const IntervalMatrix alpha = gen.Matrix(2, 3, -3, 3, {1, 2}, 30);
    const bool before = RankOneAny(alpha).exists;
    IntervalMatrix wider = alpha;
    const std::size_t i = static_cast<std::size_t>(gen.Int(0, 1));
    const std::size_t j = static_cast<std::size_t>(gen.Int(0, 2));
    wider(i, j) = Interval(alpha(i, j).lo() - Rational(gen.Int(0, 2)),
                           alpha(i, j).hi() + Rational(gen.Int(0, 2)));
    const RankOneAnalysis after = RankOneAny(wider);
    if (before) ASSERT_TRUE(after.exists);
    if (after.exists) ASSERT_TRUE(VerifyRankOneWitness(wider, *after.witness));
  }
}

// Observation only: on these sizes the answer does not change when h stops
// at min(p,q)+1 instead of 2^(min(p,q)-1).
TEST(RankOnePropertyTest, SmallerHCapGivesSameDecisionOnSamples) {
  oracle::Generator gen(61);
  for (int k = 0; k < 150; ++k) {
    const IntervalMatrix alpha = RandomReducedNonnegative(gen, 3, 3);
    const bool full = RankOneCriterionBruteForce(alpha, WithHCap(4)).holds;
    EXPECT_EQ(full, RankOneFeasibilityWitness(alpha).witness.has_value());
  }
}

}  // namespace
}  // namespace irank
