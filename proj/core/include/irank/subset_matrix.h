#ifndef IRANK_SUBSET_MATRIX_H_
#define IRANK_SUBSET_MATRIX_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "irank/budgets.h"
#include "irank/field.h"
#include "irank/interval_matrix.h"
#include "irank/matrix.h"

namespace irank {

// Nonempty subset of a field: a single value (degenerate), an explicit set
// of at least two distinct values, or the whole field (rationals only).
class SubsetEntry {
 public:
  enum class Kind { kSingleton, kFiniteSet, kAny };

  SubsetEntry() : SubsetEntry(Singleton(Rational(0))) {}
  static SubsetEntry Singleton(Rational value);
  // Sorts and checks distinctness; throws InvalidValueError for fewer than
  // two values or duplicates.
  static SubsetEntry FiniteSet(std::vector<Rational> values);
  static SubsetEntry Any();

  Kind kind() const { return kind_; }
  bool IsDegenerate() const { return kind_ == Kind::kSingleton; }
  // Singleton value; meaningless for other kinds.
  const Rational& value() const { return values_.front(); }
  // Sorted members of a finite set (one member for a singleton).
  const std::vector<Rational>& values() const { return values_; }
  bool Contains(const Rational& x) const;
  // Two distinct members for nondegenerate entries ({0, 1} for Any), the
  // value for singletons.
  std::vector<Rational> Representatives() const;

  friend bool operator==(const SubsetEntry&, const SubsetEntry&) = default;

 private:
  SubsetEntry(Kind kind, std::vector<Rational> values)
      : kind_(kind), values_(std::move(values)) {}

  Kind kind_;
  std::vector<Rational> values_;
};

// Subset matrix over a field. The constructor validates every entry value
// against the field and forbids Any over finite fields.
class SubsetMatrix {
 public:
  SubsetMatrix(FieldDescriptor field, Matrix<SubsetEntry> entries);

  const FieldDescriptor& field() const { return field_; }
  const Matrix<SubsetEntry>& entries() const { return entries_; }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }
  const SubsetEntry& operator()(std::size_t i, std::size_t j) const {
    return entries_(i, j);
  }

  SubsetMatrix Submatrix(std::span<const std::size_t> row_ids,
                         std::span<const std::size_t> col_ids) const;
  bool Contains(const RationalMatrix& a) const;

 private:
  FieldDescriptor field_;
  Matrix<SubsetEntry> entries_;
};

// Cells with pairwise distinct rows and pairwise distinct columns.
struct PgDiagonal {
  std::vector<Cell> cells;

  std::size_t length() const { return cells.size(); }
  friend bool operator==(const PgDiagonal&, const PgDiagonal&) = default;
};

// Throws InvalidDiagonalError when d repeats a row or column or leaves the
// matrix.
void ValidateDiagonal(const SubsetMatrix& alpha, const PgDiagonal& d);
bool IsTotallyNondegenerate(const SubsetMatrix& alpha, const PgDiagonal& d);

// Submatrix on the rows and columns that d does not use.
SubsetMatrix ComplementaryMatrix(const SubsetMatrix& alpha, const PgDiagonal& d);

// Signed sum over the permutations whose whole diagonal is degenerate, i.e.
// the determinant after zeroing every nondegenerate entry. The 0x0 value is
// 1. Throws DimensionMismatchError for non-square input.
Rational DetC(const SubsetMatrix& alpha);

struct SingularityResult {
  bool strongly_singular = false;
  // Violating diagonal when not strongly singular: a totally nondegenerate
  // diagonal of full length, or a shorter one whose complementary matrix
  // has nonzero det^c.
  std::optional<PgDiagonal> diagonal;
  std::optional<Rational> complement_detc;
};

// Strong singularity of a square subset matrix via its totally
// nondegenerate diagonals, longest first, then lexicographic. Throws
// SizeLimitExceededError after budgets.diagonal_limit diagonals.
SingularityResult StronglySingular(const SubsetMatrix& alpha,
                                   const Budgets& budgets = {});

struct MaxRankResult {
  std::size_t rank = 0;
  // Certified t x t submatrix and its diagonal, in submatrix coordinates.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  PgDiagonal diagonal;
};

// Largest t with a t x t submatrix that is not strongly singular.
MaxRankResult MaxRank(const SubsetMatrix& alpha, const Budgets& budgets = {});

// A contained matrix of rank MaxRank(alpha), found on the representative
// grid of the certified submatrix. Throws SizeLimitExceededError when the
// grid exceeds budgets.grid_limit.
RationalMatrix MaxRankWitness(const SubsetMatrix& alpha,
                              const Budgets& budgets = {});
RationalMatrix MaxRankWitness(const SubsetMatrix& alpha,
                              const MaxRankResult& certificate,
                              const Budgets& budgets = {});

// [a, a] becomes Singleton(a); [lo, hi] with lo < hi becomes {lo, hi}.
SubsetMatrix IntervalAsSubset(const IntervalMatrix& alpha);

// Maximum rank over every realization; entries must be finite.
std::size_t BruteForceMaxRank(const SubsetMatrix& alpha,
                              const Budgets& budgets = {});

}  // namespace irank

#endif  // IRANK_SUBSET_MATRIX_H_
