#include "irank/subset_matrix.h"

#include <gtest/gtest.h>

#include "builders.h"
#include "irank/errors.h"
#include "irank/linalg.h"
#include "oracles.h"

namespace irank {
namespace {

using testing::Any;
using testing::F;
using testing::IM;
using testing::RM;
using testing::S;
using testing::SM;

const FieldDescriptor kQ = FieldDescriptor::Rationals();
const FieldDescriptor kGF2 = FieldDescriptor::PrimeField(2);
const FieldDescriptor kGF3 = FieldDescriptor::PrimeField(3);

TEST(SubsetEntryTest, Kinds) {
  EXPECT_TRUE(S(4).IsDegenerate());
  EXPECT_EQ(F({3, 1}).values(), (std::vector<Rational>{Rational(1), Rational(3)}));
  EXPECT_TRUE(F({0, 1}).Contains(Rational(1)));
  EXPECT_FALSE(F({0, 1}).Contains(Rational(2)));
  EXPECT_TRUE(Any().Contains(Rational(7, 3)));
  EXPECT_EQ(Any().Representatives().size(), 2u);
  EXPECT_EQ(S(5).Representatives(), std::vector<Rational>{Rational(5)});
}

TEST(SubsetEntryTest, InvalidSets) {
  EXPECT_THROW(F({0}), InvalidValueError);
  EXPECT_THROW(F({1, 1}), InvalidValueError);
  EXPECT_THROW(F({}), InvalidValueError);
}

TEST(SubsetMatrixTest, FieldChecks) {
  EXPECT_THROW(SM(kGF2, {{Any()}}), InvalidValueError);
  EXPECT_THROW(SM(kGF2, {{S(2)}}), InvalidValueError);
  EXPECT_THROW(SM(kGF3, {{F({0, 5})}}), InvalidValueError);
  EXPECT_NO_THROW(SM(kQ, {{Any(), S(-3)}}));
}

TEST(DiagonalTest, Validation) {
  const SubsetMatrix alpha = SM(kQ, {{Any(), Any()}, {Any(), Any()}});
  EXPECT_NO_THROW(ValidateDiagonal(alpha, PgDiagonal{{{0, 1}, {1, 0}}}));
  EXPECT_THROW(ValidateDiagonal(alpha, PgDiagonal{{{0, 0}, {0, 1}}}), InvalidDiagonalError);
  EXPECT_THROW(ValidateDiagonal(alpha, PgDiagonal{{{0, 0}, {1, 0}}}), InvalidDiagonalError);
  EXPECT_THROW(ValidateDiagonal(alpha, PgDiagonal{{{2, 0}}}), InvalidDiagonalError);
  const SubsetMatrix mixed = SM(kQ, {{S(1), Any()}, {Any(), S(2)}});
  EXPECT_TRUE(IsTotallyNondegenerate(mixed, PgDiagonal{{{0, 1}, {1, 0}}}));
  EXPECT_FALSE(IsTotallyNondegenerate(mixed, PgDiagonal{{{0, 0}}}));
  EXPECT_TRUE(IsTotallyNondegenerate(mixed, PgDiagonal{}));
}

TEST(DiagonalTest, ComplementaryMatrix) {
  const SubsetMatrix alpha =
      SM(kQ, {{S(1), S(2), S(3)}, {S(4), S(5), S(6)}, {S(7), S(8), Any()}});
  const SubsetMatrix c = ComplementaryMatrix(alpha, PgDiagonal{{{0, 0}}});
  EXPECT_EQ(c.rows(), 2u);
  EXPECT_EQ(c(0, 0), S(5));
  EXPECT_EQ(c(1, 1), Any());
  const SubsetMatrix empty =
      ComplementaryMatrix(alpha, PgDiagonal{{{0, 0}, {1, 1}, {2, 2}}});
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(empty.cols(), 0u);
  const SubsetMatrix same = ComplementaryMatrix(alpha, PgDiagonal{});
  EXPECT_EQ(same.entries(), alpha.entries());
  EXPECT_THROW(ComplementaryMatrix(alpha, PgDiagonal{{{0, 0}, {0, 1}}}), InvalidDiagonalError);
}

TEST(DetCTest, Examples) {
  EXPECT_EQ(DetC(SM(kQ, {{S(1), F({0, 1})}, {S(2), S(3)}})), Rational(3));
  EXPECT_EQ(DetC(SM(kQ, {{Any(), F({0, 1})}, {Any(), Any()}})), Rational(0));
  EXPECT_EQ(DetC(SM(kQ, {{S(1), S(2)}, {S(3), S(4)}})), Rational(-2));
  EXPECT_EQ(DetC(SubsetMatrix(kQ, Matrix<SubsetEntry>(0, 0))), Rational(1));
  EXPECT_THROW(DetC(SM(kQ, {{S(1), S(2)}})), DimensionMismatchError);
}

TEST(DetCTest, OverPrimeField) {
  // det = 1*1 - 1*1 = 0 over any field; [[1,1],[0,1]] has det 1.
  EXPECT_EQ(DetC(SM(kGF2, {{S(1), S(1)}, {S(1), S(1)}})), Rational(0));
  EXPECT_EQ(DetC(SM(kGF3, {{S(2), S(1)}, {S(1), S(2)}})), Rational(0));
  EXPECT_EQ(DetC(SM(kGF3, {{S(2), S(0)}, {S(0), S(2)}})), Rational(1));
}

SubsetEntry RandomEntry(oracle::Generator& gen, const FieldDescriptor& field,
                        int degenerate_percent) {
  const long top = field.is_infinite() ? 3 : static_cast<long>(field.modulus()) - 1;
  const long bottom = field.is_infinite() ? -3 : 0;
  const long a = gen.Int(bottom, top);
  if (gen.Chance(degenerate_percent)) return S(a);
  if (field.is_infinite() && gen.Chance(15)) return Any();
  long b = gen.Int(bottom, top);
  while (b == a) b = gen.Int(bottom, top);
  return F({a, b});
}

SubsetMatrix RandomSubset(oracle::Generator& gen, const FieldDescriptor& field,
                          std::size_t p, std::size_t q, int degenerate_percent) {
  Matrix<SubsetEntry> m(p, q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) m(i, j) = RandomEntry(gen, field, degenerate_percent);
  }
  return SubsetMatrix(field, std::move(m));
}

TEST(DetCTest, MatchesLeibnizOracle) {
  oracle::Generator gen(71);
  for (const FieldDescriptor& field : {kQ, kGF2, kGF3, FieldDescriptor::PrimeField(5)}) {
    for (int k = 0; k < 150; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.Int(1, 4));
      const SubsetMatrix alpha = RandomSubset(gen, field, n, n, 60);
      ASSERT_EQ(DetC(alpha), oracle::LeibnizDetC(alpha)) << field.ToString();
    }
  }
}

TEST(DetCTest, SingletonsGiveDeterminant) {
  oracle::Generator gen(73);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen.Int(3, 4));
    const SubsetMatrix alpha = RandomSubset(gen, kQ, n, n, 100);
    RationalMatrix point(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) point(i, j) = alpha(i, j).value();
    }
    ASSERT_EQ(DetC(alpha), oracle::LeibnizDet(point));
  }
}

TEST(DetCTest, RowPermutationMultipliesBySign) {
  oracle::Generator gen(79);
  for (int k = 0; k < 60; ++k) {
    const SubsetMatrix alpha = RandomSubset(gen, kQ, 3, 3, 100);
    std::vector<std::size_t> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), gen.rng());
    Matrix<SubsetEntry> permuted(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) permuted(i, j) = alpha(perm[i], j);
    }
    ASSERT_EQ(DetC(SubsetMatrix(kQ, permuted)),
              Rational(oracle::PermutationSign(perm)) * DetC(alpha));
  }
}

TEST(StronglySingularTest, Examples) {
  const SingularityResult a = StronglySingular(SM(kGF2, {{S(1), S(0)}, {S(1), S(0)}}));
  EXPECT_TRUE(a.strongly_singular);
  EXPECT_FALSE(a.diagonal.has_value());

  const SubsetMatrix beta = SM(kGF2, {{F({0, 1}), S(1)}, {S(1), S(1)}});
  const SingularityResult b = StronglySingular(beta);
  EXPECT_FALSE(b.strongly_singular);
  ASSERT_TRUE(b.diagonal.has_value());
  EXPECT_EQ(*b.diagonal, (PgDiagonal{{{0, 0}}}));
  EXPECT_EQ(b.complement_detc, Rational(1));
  EXPECT_EQ(MaxRankWitness(beta), RM({{"0", "1"}, {"1", "1"}}));

  const SingularityResult c = StronglySingular(SM(kQ, {{Any(), S(0)}, {S(0), F({1, 2})}}));
  EXPECT_FALSE(c.strongly_singular);
  EXPECT_EQ(c.diagonal->length(), 2u);
  EXPECT_FALSE(c.complement_detc.has_value());
}

TEST(StronglySingularTest, DiagonalBudget) {
  // Column 0 is degenerate, so no full-length diagonal exists.
  Matrix<SubsetEntry> m(5, 5, Any());
  for (std::size_t i = 0; i < 5; ++i) m(i, 0) = S(0);
  Budgets tight;
  tight.diagonal_limit = 3;
  EXPECT_THROW(StronglySingular(SubsetMatrix(kQ, m), tight), SizeLimitExceededError);
}

TEST(MaxRankTest, Examples) {
  const SubsetMatrix point = SM(kQ, {{S(1), S(2), S(3)}, {S(2), S(4), S(6)}});
  EXPECT_EQ(MaxRank(point).rank, 1u);
  EXPECT_EQ(MaxRankWitness(point), RM({{"1", "2", "3"}, {"2", "4", "6"}}));

  const SubsetMatrix bridged = IntervalAsSubset(IM({{{"0", "1"}, {"0", "1"}}, {{"0", "0"}, {"0", "0"}}}));
  EXPECT_EQ(MaxRank(bridged).rank, 1u);

  Matrix<SubsetEntry> any(2, 3, Any());
  const SubsetMatrix all_any(kQ, any);
  EXPECT_EQ(MaxRank(all_any).rank, 2u);
  const RationalMatrix w = MaxRankWitness(all_any);
  EXPECT_EQ(ExactRank(w), 2u);

  EXPECT_EQ(MaxRank(SM(kQ, {{S(0)}})).rank, 0u);
  EXPECT_EQ(BruteForceMaxRank(SM(kQ, {{S(0)}})), 0u);
  EXPECT_EQ(BruteForceMaxRank(SM(kGF2, {{F({0, 1}), F({0, 1})}, {F({0, 1}), F({0, 1})}})), 2u);
}

TEST(MaxRankTest, Certificate) {
  const SubsetMatrix alpha = SM(kQ, {{S(1), S(1), S(0)}, {S(1), S(1), S(0)}, {S(0), S(0), Any()}});
  const MaxRankResult r = MaxRank(alpha);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.cols.size(), 2u);
  const SubsetMatrix sub = alpha.Submatrix(r.rows, r.cols);
  EXPECT_NO_THROW(ValidateDiagonal(sub, r.diagonal));
  EXPECT_TRUE(IsTotallyNondegenerate(sub, r.diagonal));
  const RationalMatrix w = MaxRankWitness(alpha, r);
  EXPECT_TRUE(alpha.Contains(w));
  EXPECT_EQ(ExactRank(w), 2u);
}

TEST(IntervalAsSubsetTest, Conversion) {
  const SubsetMatrix s = IntervalAsSubset(IM({{{"1", "1"}, {"0", "2"}}}));
  EXPECT_EQ(s(0, 0), S(1));
  EXPECT_EQ(s(0, 1), F({0, 2}));
  EXPECT_TRUE(s.field().is_infinite());
}

TEST(BruteForceTest, RejectsAnyAndBudget) {
  EXPECT_THROW(BruteForceMaxRank(SM(kQ, {{Any()}})), PreconditionError);
  Matrix<SubsetEntry> m(3, 3, F({0, 1}));
  Budgets tight;
  tight.grid_limit = 100;
  EXPECT_THROW(BruteForceMaxRank(SubsetMatrix(kGF2, m), tight), SizeLimitExceededError);
}

// Independent oracle: explicit enumeration with the Leibniz rank by minors.
std::size_t OracleMaxRank(const SubsetMatrix& alpha) {
  const std::size_t p = alpha.rows();
  const std::size_t q = alpha.cols();
  std::vector<std::size_t> digit(p * q, 0);
  std::size_t best = 0;
  while (true) {
    RationalMatrix m(p, q);
    for (std::size_t k = 0; k < p * q; ++k) m(k / q, k % q) = alpha(k / q, k % q).values()[digit[k]];
    best = std::max(best, oracle::RankByMinors(m, alpha.field()));
    std::size_t k = 0;
    while (k < p * q && ++digit[k] == alpha(k / q, k % q).values().size()) digit[k++] = 0;
    if (k == p * q) return best;
  }
}

TEST(SubsetPropertyTest, BruteForceMatchesOracle) {
  oracle::Generator gen(83);
  for (int k = 0; k < 120; ++k) {
    const FieldDescriptor& field = gen.Chance(50) ? kGF2 : kGF3;
    const SubsetMatrix alpha = RandomSubset(gen, field, 2, 3, 50);
    ASSERT_EQ(BruteForceMaxRank(alpha), OracleMaxRank(alpha));
  }
}

TEST(SubsetPropertyTest, MaxRankMatchesEnumeration) {
  oracle::Generator gen(89);
  for (int k = 0; k < 300; ++k) {
    const FieldDescriptor& field = k % 3 == 0 ? kGF2 : (k % 3 == 1 ? kGF3 : kQ);
    const std::size_t p = static_cast<std::size_t>(gen.Int(1, 3));
    const std::size_t q = static_cast<std::size_t>(gen.Int(1, 3));
    SubsetMatrix alpha = RandomSubset(gen, field, p, q, 50);
    bool finite = true;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < q; ++j) finite = finite && alpha(i, j).kind() != SubsetEntry::Kind::kAny;
    }
    const std::size_t rank = MaxRank(alpha).rank;
    if (finite) ASSERT_EQ(rank, OracleMaxRank(alpha)) << "instance " << k;
    const RationalMatrix w = MaxRankWitness(alpha);
    ASSERT_TRUE(alpha.Contains(w));
    ASSERT_EQ(oracle::RankByMinors(w, field), rank);
    if (p == q) ASSERT_EQ(StronglySingular(alpha).strongly_singular, rank < p);
  }
}

TEST(SubsetPropertyTest, IntervalBridgeMatchesVertices) {
  oracle::Generator gen(97);
  for (int k = 0; k < 150; ++k) {
    const std::size_t p = static_cast<std::size_t>(gen.Int(1, 3));
    const std::size_t q = static_cast<std::size_t>(gen.Int(1, 3));
    const IntervalMatrix alpha = gen.Matrix(p, q, -2, 2, {1, 2}, 50);
    ASSERT_EQ(MaxRank(IntervalAsSubset(alpha)).rank, oracle::VertexMaxRank(alpha));
  }
}

}  // namespace
}  // namespace irank
