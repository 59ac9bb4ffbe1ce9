#include "irank/rank_range.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "irank/full_rank.h"
#include "irank/linalg.h"
#include "irank/rank_one.h"
#include "irank/subset_matrix.h"

namespace irank {

RankRangeReport RankRange(const IntervalMatrix& alpha, const Budgets& budgets) {
  RankRangeReport report;
  const std::size_t p = alpha.rows();
  const std::size_t q = alpha.cols();
  const std::size_t full = std::min(p, q);

  const SubsetMatrix as_subset = IntervalAsSubset(alpha);
  const MaxRankResult max_cert = MaxRank(as_subset, budgets);
  report.max_rank = max_cert.rank;
  report.decided_ranks[max_cert.rank] = MaxRankWitness(as_subset, max_cert, budgets);
  report.min_rank_upper = report.max_rank;

  bool all_contain_zero = true;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      all_contain_zero &= alpha(i, j).ContainsZero();
    }
  }
  if (all_contain_zero) {
    report.min_rank_lower = 0;
    report.min_rank_upper = 0;
    report.decided_ranks[0] = RationalMatrix(p, q);
    return report;
  }
  report.min_rank_lower = 1;
  if (report.max_rank == 1) {
    report.min_rank_upper = 1;
    return report;
  }

  const RankOneAnalysis rank_one = RankOneAny(alpha, budgets);
  if (rank_one.exists) {
    report.min_rank_upper = 1;
    report.decided_ranks[1] = rank_one.witness->Outer();
    return report;
  }
  report.min_rank_lower = 2;

  const IntervalMatrix tall = p >= q ? alpha : alpha.Transposed();
  std::optional<NullPair> pair = NullPairSearch(tall, budgets);
  if (!pair) {
    report.min_rank_lower = full;
    report.min_rank_upper = full;
    return report;
  }
  RationalMatrix b = p >= q ? pair->a : pair->a.Transposed();
  const std::size_t r = ExactRank(b);
  if (r < report.min_rank_upper) {
    report.min_rank_upper = r;
    report.decided_ranks[r] = std::move(b);
  }
  return report;
}

bool VerifyRankRangeReport(const IntervalMatrix& alpha, const RankRangeReport& r) {
  if (r.min_rank_lower > r.min_rank_upper || r.min_rank_upper > r.max_rank) {
    return false;
  }
  if (r.max_rank > std::min(alpha.rows(), alpha.cols())) return false;
  for (const auto& [rank, witness] : r.decided_ranks) {
    if (witness.rows() != alpha.rows() || witness.cols() != alpha.cols()) return false;
    if (!Contains(alpha, witness) || ExactRank(witness) != rank) return false;
    if (rank < r.min_rank_lower || rank > r.max_rank) return false;
  }
  return r.decided_ranks.contains(r.max_rank) &&
         r.decided_ranks.contains(r.min_rank_upper);
}

}  // namespace irank
