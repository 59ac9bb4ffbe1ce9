#ifndef IRANK_RANK_RANGE_H_
#define IRANK_RANK_RANGE_H_

#include <cstddef>
#include <map>

#include "irank/budgets.h"
#include "irank/interval_matrix.h"

namespace irank {

// Bounds on the attained ranks of an interval matrix. max_rank is exact;
// the minimum is only bracketed. Every rank in decided_ranks maps to a
// contained matrix of exactly that rank.
struct RankRangeReport {
  std::size_t max_rank = 0;
  std::size_t min_rank_lower = 0;
  std::size_t min_rank_upper = 0;
  std::map<std::size_t, RationalMatrix> decided_ranks;
};

// Combines the maximal-rank computation, the rank-one search and the
// rank-deficiency search.
RankRangeReport RankRange(const IntervalMatrix& alpha, const Budgets& budgets = {});

// Checks the ordering invariant and every witness in decided_ranks.
bool VerifyRankRangeReport(const IntervalMatrix& alpha, const RankRangeReport& r);

}  // namespace irank

#endif  // IRANK_RANK_RANGE_H_
