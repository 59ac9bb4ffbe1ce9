#ifndef IRANK_MATRIX_H_
#define IRANK_MATRIX_H_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irank/errors.h"
#include "irank/rational.h"

namespace irank {

// Dense row-major grid. Used for rational matrices, interval matrices and
// subset matrices alike.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Throws DimensionMismatchError on ragged input.
  static Matrix FromRows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix out(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) {
        throw DimensionMismatchError("row " + std::to_string(i) + " has " +
                                     std::to_string(rows[i].size()) +
                                     " entries, expected " +
                                     std::to_string(c));
      }
      for (std::size_t j = 0; j < c; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  Matrix Transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  Matrix Submatrix(std::span<const std::size_t> row_ids,
                   std::span<const std::size_t> col_ids) const {
    Matrix out(row_ids.size(), col_ids.size());
    for (std::size_t i = 0; i < row_ids.size(); ++i) {
      for (std::size_t j = 0; j < col_ids.size(); ++j) {
        out(i, j) = (*this)(row_ids[i], col_ids[j]);
      }
    }
    return out;
  }

  void SwapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap((*this)(a, j), (*this)(b, j));
    }
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

// (row, column) position, zero-based.
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string CellName(std::size_t row, std::size_t col) {
  return "entry (" + std::to_string(row) + "," + std::to_string(col) + ")";
}

inline RationalVector Multiply(const RationalMatrix& a,
                               std::span<const Rational> x) {
  if (x.size() != a.cols()) {
    throw DimensionMismatchError("vector length " + std::to_string(x.size()) +
                                 " does not match " +
                                 std::to_string(a.cols()) + " columns");
  }
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

}  // namespace irank

#endif  // IRANK_MATRIX_H_
