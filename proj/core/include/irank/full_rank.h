#ifndef IRANK_FULL_RANK_H_
#define IRANK_FULL_RANK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "irank/budgets.h"
#include "irank/interval_matrix.h"

namespace irank {

// Vector over {-1, +1}; induces the diagonal matrix T_s.
class SignVector {
 public:
  SignVector() = default;
  // Throws InvalidValueError for components other than -1 and +1.
  explicit SignVector(std::vector<int> components);
  // Component k is -1 iff bit k of `bits` is set.
  static SignVector FromBits(std::uint64_t bits, std::size_t length);

  std::size_t size() const { return components_.size(); }
  int operator[](std::size_t k) const { return components_[k]; }
  const std::vector<int>& components() const { return components_; }
  SignVector Negated() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> components_;
};

struct RohnResult {
  bool full_rank = false;
  Rational det_mid;
  // First (x, y) with det(mid) * det(mid - T_x rad T_y) <= 0.
  std::optional<SignVector> violating_x;
  std::optional<SignVector> violating_y;
  std::optional<Rational> violating_det;
};

// mid - T_x rad T_y.
RationalMatrix RohnVertexMatrix(const MidRadMod& parts, const SignVector& x,
                                const SignVector& y);

// Square full-rank test over all sign pairs with x(0) = +1 (the pair
// (-x, -y) gives the same matrix). Throws PreconditionError for non-square
// input and SizeLimitExceededError if 2^(2p-1) > budgets.orthant_limit.
RohnResult RohnSquareFullRank(const IntervalMatrix& alpha,
                              const Budgets& budgets = {});

// Nonzero x with A x = 0 for some A contained in alpha.
struct NullPair {
  RationalVector x;
  RationalMatrix a;
  SignVector orthant;
  // Row coefficients: row i of A is mid_i - d_i (rad_i o s).
  RationalVector d;
};

// Searches the single orthant T_s x >= 0, normalized by sum s_i x_i = 1.
std::optional<NullPair> SearchOrthant(const IntervalMatrix& alpha,
                                      const MidRadMod& parts,
                                      const SignVector& s,
                                      const Budgets& budgets = {});

// Decides whether |mid x| <= rad |x| has a nonzero solution by exact
// orthant enumeration (s(0) = +1), returning the first pair found.
// Requires rows >= cols (PreconditionError otherwise); throws
// SizeLimitExceededError if 2^(q-1) > budgets.orthant_limit.
std::optional<NullPair> NullPairSearch(const IntervalMatrix& alpha,
                                       const Budgets& budgets = {});

// True iff every contained matrix has rank min(p, q). Transposes when p < q.
bool FullRankRectangular(const IntervalMatrix& alpha,
                         const Budgets& budgets = {});

// Rational B in alpha with rank(B) < q, or nullopt iff alpha has full
// rank. Requires p >= q.
std::optional<RationalMatrix> RankDeficientRationalWitness(
    const IntervalMatrix& alpha, const Budgets& budgets = {});

// Independent check of a NullPair against alpha: x != 0, A x = 0, A in alpha.
bool VerifyNullPair(const IntervalMatrix& alpha, const RationalVector& x,
                    const RationalMatrix& a);

}  // namespace irank

#endif  // IRANK_FULL_RANK_H_
