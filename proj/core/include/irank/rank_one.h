#ifndef IRANK_RANK_ONE_H_
#define IRANK_RANK_ONE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "irank/budgets.h"
#include "irank/interval_matrix.h"

namespace irank {

// B = u v^T.
struct RankOneWitness {
  RationalVector u;
  RationalVector v;

  RationalMatrix Outer() const;
};

// Product of lower endpoints along (rows[t], cols[t]) strictly exceeds the
// product of upper endpoints along (rows[t], cols[sigma[t]]).
struct CriterionViolation {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<std::size_t> sigma;
  Rational lower_product;
  Rational upper_product;

  std::size_t h() const { return rows.size(); }
};

// Recomputes both products from alpha and checks the strict inequality and
// the shape of the index data.
bool VerifyViolation(const IntervalMatrix& alpha, const CriterionViolation& v);

// True iff B = u v^T lies in alpha and has rank exactly one.
bool VerifyRankOneWitness(const IntervalMatrix& alpha, const RankOneWitness& w);

struct CriterionResult {
  bool holds = false;
  std::optional<CriterionViolation> violation;
};

// Product-inequality criterion for reduced nonnegative matrices with
// p, q >= 2, over every h in [2, 2^(min(p,q)-1)], all row and column index
// tuples (repetition allowed) and all permutations. The first violation in
// (h, sorted row multiset, column multiset, arrangement) order is returned.
// Throws PreconditionError if alpha is not reduced and nonnegative or is
// thinner than 2x2, and SizeLimitExceededError when 2^(min(p,q)-1) exceeds
// budgets.h_cap.
CriterionResult RankOneCriterionBruteForce(const IntervalMatrix& alpha,
                                           const Budgets& budgets = {});

struct FeasibilityResult {
  std::optional<RankOneWitness> witness;
  std::optional<CriterionViolation> violation;
};

// Positive rationals u, v with lo <= u_i v_j <= hi, found by Bellman-Ford
// relaxation of the multiplicative constraint graph. A cycle whose weight
// product is below one is returned as a CriterionViolation; so is an entry
// with hi = 0. Exactly one of the result fields is set, and it has been
// verified. Requires alpha reduced and nonnegative (PreconditionError).
FeasibilityResult RankOneFeasibilityWitness(const IntervalMatrix& alpha);

// Why one sign branch contains no rank-one matrix.
struct BranchRefutation {
  std::uint64_t index = 0;
  SignRecord signs;
  std::optional<Cell> negative_cell;
  std::optional<CriterionViolation> violation;
};

struct RankOneAnalysis {
  bool exists = false;
  std::optional<RankOneWitness> witness;
  std::vector<std::size_t> reduced_rows;
  std::vector<std::size_t> reduced_cols;
  // Set when every entry of alpha is [0, 0].
  bool all_zero = false;
  // One entry per explored branch, in index order, when exists is false.
  std::vector<BranchRefutation> refutations;
  std::uint64_t branch_count = 0;
};

// Decides whether any rank-one matrix lies in alpha: reduce, split signs,
// normalize and clamp each branch, then run the feasibility search. Returns
// the witness of the lowest-index successful branch, re-embedded into the
// original shape. Throws SizeLimitExceededError if the branch count exceeds
// budgets.branch_limit.
RankOneAnalysis RankOneAny(const IntervalMatrix& alpha,
                           const Budgets& budgets = {});

// Simplest nonzero rational in the interval; requires it not to be [0, 0].
Rational SimplestNonzero(const Interval& x);

}  // namespace irank

#endif  // IRANK_RANK_ONE_H_
