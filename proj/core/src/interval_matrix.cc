#include "irank/interval_matrix.h"

#include <string>
#include <utility>

#include "irank/errors.h"

namespace irank {

MidRadMod ComputeMidRadMod(const IntervalMatrix& alpha) {
  MidRadMod out{RationalMatrix(alpha.rows(), alpha.cols()),
                RationalMatrix(alpha.rows(), alpha.cols()),
                RationalMatrix(alpha.rows(), alpha.cols())};
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    for (std::size_t j = 0; j < alpha.cols(); ++j) {
      out.mid(i, j) = alpha(i, j).Mid();
      out.rad(i, j) = alpha(i, j).Rad();
      out.mod(i, j) = alpha(i, j).Mag();
    }
  }
  return out;
}

RationalMatrix Midpoint(const IntervalMatrix& alpha) {
  return ComputeMidRadMod(alpha).mid;
}

RationalMatrix Radius(const IntervalMatrix& alpha) {
  return ComputeMidRadMod(alpha).rad;
}

IntervalMatrix PointMatrix(const RationalMatrix& a) {
  IntervalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Interval::Point(a(i, j));
  }
  return out;
}

bool Contains(const IntervalMatrix& alpha, const RationalMatrix& a) {
  if (alpha.rows() != a.rows() || alpha.cols() != a.cols()) {
    throw DimensionMismatchError(
        "matrix is " + std::to_string(a.rows()) + "x" +
        std::to_string(a.cols()) + ", interval matrix is " +
        std::to_string(alpha.rows()) + "x" + std::to_string(alpha.cols()));
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!alpha(i, j).Contains(a(i, j))) return false;
    }
  }
  return true;
}

namespace {

bool RowAllZeroContaining(const IntervalMatrix& alpha, std::size_t i,
                          const std::vector<std::size_t>& cols) {
  for (std::size_t j : cols) {
    if (!alpha(i, j).ContainsZero()) return false;
  }
  return true;
}

bool ColAllZeroContaining(const IntervalMatrix& alpha, std::size_t j,
                          const std::vector<std::size_t>& rows) {
  for (std::size_t i : rows) {
    if (!alpha(i, j).ContainsZero()) return false;
  }
  return true;
}

std::vector<std::size_t> Iota(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = k;
  return out;
}

}  // namespace

Reduction ReduceZeroRowsCols(const IntervalMatrix& alpha) {
  Reduction out;
  out.original_rows = alpha.rows();
  out.original_cols = alpha.cols();
  out.rows = Iota(alpha.rows());
  out.cols = Iota(alpha.cols());
  // Row pass then column pass until nothing changes.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> kept_rows;
    for (std::size_t i : out.rows) {
      if (!RowAllZeroContaining(alpha, i, out.cols)) kept_rows.push_back(i);
    }
    changed |= kept_rows.size() != out.rows.size();
    out.rows = std::move(kept_rows);
    std::vector<std::size_t> kept_cols;
    for (std::size_t j : out.cols) {
      if (!ColAllZeroContaining(alpha, j, out.rows)) kept_cols.push_back(j);
    }
    changed |= kept_cols.size() != out.cols.size();
    out.cols = std::move(kept_cols);
  }
  if (out.rows.empty() || out.cols.empty()) {
    out.rows.clear();
    out.cols.clear();
  }
  out.matrix = alpha.Submatrix(out.rows, out.cols);
  return out;
}

RationalMatrix Reembed(const Reduction& reduction, const RationalMatrix& a) {
  if (a.rows() != reduction.rows.size() || a.cols() != reduction.cols.size()) {
    throw DimensionMismatchError("matrix does not match the reduced shape");
  }
  RationalMatrix out(reduction.original_rows, reduction.original_cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(reduction.rows[i], reduction.cols[j]) = a(i, j);
    }
  }
  return out;
}

bool IsReduced(const IntervalMatrix& alpha) {
  const std::vector<std::size_t> all_rows = Iota(alpha.rows());
  const std::vector<std::size_t> all_cols = Iota(alpha.cols());
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    if (RowAllZeroContaining(alpha, i, all_cols)) return false;
  }
  for (std::size_t j = 0; j < alpha.cols(); ++j) {
    if (ColAllZeroContaining(alpha, j, all_rows)) return false;
  }
  return true;
}

namespace {

void CheckRow(const IntervalMatrix& alpha, std::size_t row) {
  if (row >= alpha.rows()) {
    throw DimensionMismatchError("row " + std::to_string(row) +
                                 " out of range for " +
                                 std::to_string(alpha.rows()) + " rows");
  }
}

}  // namespace

IntervalMatrix ApplyRowOp(const IntervalMatrix& alpha, const RowOp& op) {
  IntervalMatrix out = alpha;
  if (const auto* swap = std::get_if<SwapRows>(&op)) {
    CheckRow(alpha, swap->a);
    CheckRow(alpha, swap->b);
    out.SwapRows(swap->a, swap->b);
  } else if (const auto* scale = std::get_if<ScaleRow>(&op)) {
    CheckRow(alpha, scale->row);
    if (scale->factor.is_zero()) throw ZeroScaleError("row scale factor is 0");
    const Interval factor = Interval::Point(scale->factor);
    for (Interval& x : out.row(scale->row)) x = factor * x;
  } else {
    const auto& add = std::get<AddRowMultiple>(op);
    CheckRow(alpha, add.target);
    CheckRow(alpha, add.source);
    const Interval factor = Interval::Point(add.factor);
    for (std::size_t j = 0; j < alpha.cols(); ++j) {
      out(add.target, j) = alpha(add.target, j) + factor * alpha(add.source, j);
    }
  }
  return out;
}

IntervalMatrix ApplyColumnOp(const IntervalMatrix& alpha, const RowOp& op) {
  return ApplyRowOp(alpha.Transposed(), op).Transposed();
}

SignBranches::SignBranches(IntervalMatrix alpha) : alpha_(std::move(alpha)) {
  for (std::size_t i = 0; i < alpha_.rows(); ++i) {
    for (std::size_t j = 0; j < alpha_.cols(); ++j) {
      if (alpha_(i, j).StraddlesZero()) straddling_.push_back({i, j});
    }
  }
}

std::uint64_t SignBranches::size() const {
  if (straddling_.size() >= 64) {
    throw SizeLimitExceededError(std::to_string(straddling_.size()) +
                                 " zero-straddling entries");
  }
  return std::uint64_t{1} << straddling_.size();
}

IntervalMatrix SignBranches::operator[](std::uint64_t index) const {
  IntervalMatrix out = alpha_;
  for (std::size_t k = 0; k < straddling_.size(); ++k) {
    const Cell c = straddling_[k];
    Interval& x = out(c.row, c.col);
    x = ((index >> k) & 1) ? Interval(Rational(0), x.hi())
                           : Interval(x.lo(), Rational(0));
  }
  return out;
}

IntervalMatrix ApplySigns(const IntervalMatrix& alpha, const SignRecord& signs) {
  IntervalMatrix out = alpha;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      if (signs.row_signs[i] * signs.col_signs[j] < 0) out(i, j) = -out(i, j);
    }
  }
  return out;
}

NormalizeOutcome NormalizeAndClamp(const IntervalMatrix& alpha) {
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    for (std::size_t j = 0; j < alpha.cols(); ++j) {
      if (alpha(i, j).StraddlesZero()) {
        throw PreconditionError(CellName(i, j) + " " + alpha(i, j).ToString() +
                                " is not sign-definite");
      }
    }
  }
  NormalizeOutcome out;
  out.signs.row_signs.assign(alpha.rows(), 1);
  out.signs.col_signs.assign(alpha.cols(), 1);
  if (alpha.empty()) {
    out.clamped = alpha;
    return out;
  }
  // First row: flip every column whose head entry is negative somewhere.
  for (std::size_t j = 0; j < alpha.cols(); ++j) {
    if (alpha(0, j).lo().sign() < 0) out.signs.col_signs[j] = -1;
  }
  // First column: flip rows, using the already flipped column sign.
  for (std::size_t i = 1; i < alpha.rows(); ++i) {
    const Interval head = out.signs.col_signs[0] < 0 ? -alpha(i, 0) : alpha(i, 0);
    if (head.lo().sign() < 0) out.signs.row_signs[i] = -1;
  }
  IntervalMatrix flipped = ApplySigns(alpha, out.signs);
  for (std::size_t i = 0; i < flipped.rows(); ++i) {
    for (std::size_t j = 0; j < flipped.cols(); ++j) {
      if (flipped(i, j).hi().sign() < 0) {
        out.negative_cell = Cell{i, j};
        return out;
      }
    }
  }
  for (std::size_t i = 0; i < flipped.rows(); ++i) {
    for (std::size_t j = 0; j < flipped.cols(); ++j) {
      Interval& x = flipped(i, j);
      if (x.lo().sign() < 0) x = Interval(Rational(0), x.hi());
    }
  }
  out.clamped = std::move(flipped);
  return out;
}

}  // namespace irank
