#ifndef IRANK_INTERVAL_MATRIX_H_
#define IRANK_INTERVAL_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "irank/interval.h"
#include "irank/matrix.h"

namespace irank {

using IntervalMatrix = Matrix<Interval>;

struct MidRadMod {
  RationalMatrix mid;
  RationalMatrix rad;
  RationalMatrix mod;
};

MidRadMod ComputeMidRadMod(const IntervalMatrix& alpha);
RationalMatrix Midpoint(const IntervalMatrix& alpha);
RationalMatrix Radius(const IntervalMatrix& alpha);

// Point matrix [a, a] for every entry of `a`.
IntervalMatrix PointMatrix(const RationalMatrix& a);

// True iff every a(i,j) lies in alpha(i,j). Throws DimensionMismatchError.
bool Contains(const IntervalMatrix& alpha, const RationalMatrix& a);

// Result of deleting every row and column all of whose entries contain 0.
struct Reduction {
  IntervalMatrix matrix;
  // Original indices of the kept rows and columns, ascending.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::size_t original_rows = 0;
  std::size_t original_cols = 0;

  bool empty() const { return matrix.empty(); }
};

Reduction ReduceZeroRowsCols(const IntervalMatrix& alpha);

// Embeds a matrix over the kept rows/columns back into the original shape,
// padding the deleted lines with zeros.
RationalMatrix Reembed(const Reduction& reduction, const RationalMatrix& a);

// True iff every row and every column has an entry not containing 0.
bool IsReduced(const IntervalMatrix& alpha);

struct SwapRows {
  std::size_t a = 0;
  std::size_t b = 0;
};
struct ScaleRow {
  std::size_t row = 0;
  Rational factor;
};
// row(target) += factor * row(source), in interval arithmetic.
struct AddRowMultiple {
  std::size_t target = 0;
  std::size_t source = 0;
  Rational factor;
};
using RowOp = std::variant<SwapRows, ScaleRow, AddRowMultiple>;

// Throws ZeroScaleError for ScaleRow with factor 0 and
// DimensionMismatchError for out-of-range rows.
IntervalMatrix ApplyRowOp(const IntervalMatrix& alpha, const RowOp& op);
// The same operations applied to columns.
IntervalMatrix ApplyColumnOp(const IntervalMatrix& alpha, const RowOp& op);

// Lazy enumeration of the sign splits of alpha: every entry with
// lo < 0 < hi becomes [lo, 0] (bit clear) or [0, hi] (bit set), bit k of the
// branch index controlling the k-th straddling entry in row-major order.
class SignBranches {
 public:
  explicit SignBranches(IntervalMatrix alpha);

  // Throws SizeLimitExceededError if there are 64 or more straddling entries.
  std::uint64_t size() const;
  const std::vector<Cell>& straddling() const { return straddling_; }
  IntervalMatrix operator[](std::uint64_t index) const;

 private:
  IntervalMatrix alpha_;
  std::vector<Cell> straddling_;
};

// Row and column sign flips applied by NormalizeAndClamp; entries are +1/-1.
struct SignRecord {
  std::vector<int> row_signs;
  std::vector<int> col_signs;
  friend bool operator==(const SignRecord&, const SignRecord&) = default;
};

struct NormalizeOutcome {
  SignRecord signs;
  // Set when, after flipping, some entry lies in (-inf, 0): no rank-one
  // matrix exists in this branch.
  std::optional<Cell> negative_cell;
  // [max(0, lo), hi] of the flipped matrix; empty iff negative_cell is set.
  std::optional<IntervalMatrix> clamped;
};

// Flips signs so the first row and first column are nonnegative, rejects
// branches with a strictly negative entry and clamps the rest at zero.
// Requires every entry to be sign-definite; throws PreconditionError
// otherwise.
NormalizeOutcome NormalizeAndClamp(const IntervalMatrix& alpha);

// Applies the sign flips of `signs` to alpha (each flip is an involution).
IntervalMatrix ApplySigns(const IntervalMatrix& alpha, const SignRecord& signs);

}  // namespace irank

#endif  // IRANK_INTERVAL_MATRIX_H_
