#ifndef IRANK_BUDGETS_H_
#define IRANK_BUDGETS_H_

#include <cstdint>

namespace irank {

// Explicit work limits for the exponential searches. Exceeding one raises
// SizeLimitExceededError (or EliminationBlowupError); results are never
// silently truncated.
struct Budgets {
  // Sign pairs in the square full-rank test and orthants in the null-vector
  // search.
  std::uint64_t orthant_limit = std::uint64_t{1} << 12;
  // Sign branches explored by the rank-one pipeline.
  std::uint64_t branch_limit = std::uint64_t{1} << 12;
  // Largest product length h the brute-force rank-one criterion may need,
  // i.e. 2^(min(p,q)-1) <= h_cap. The default admits min(p,q) <= 3.
  std::uint64_t h_cap = 4;
  // Representative-grid points in witness extraction and realizations in
  // the brute-force maximal-rank oracle.
  std::uint64_t grid_limit = std::uint64_t{1} << 20;
  // Live constraints during Fourier-Motzkin elimination.
  std::uint64_t elimination_limit = std::uint64_t{1} << 16;
  // Partial diagonals inspected by the strong-singularity test.
  std::uint64_t diagonal_limit = std::uint64_t{1} << 22;
};

}  // namespace irank

#endif  // IRANK_BUDGETS_H_
