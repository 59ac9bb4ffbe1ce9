#include "irank/subset_matrix.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "irank/errors.h"
#include "irank/linalg.h"

namespace irank {

SubsetEntry SubsetEntry::Singleton(Rational value) {
  return SubsetEntry(Kind::kSingleton, {std::move(value)});
}

SubsetEntry SubsetEntry::FiniteSet(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  if (values.size() < 2) {
    throw InvalidValueError("finite set needs at least two values");
  }
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw InvalidValueError("finite set has a repeated value");
  }
  return SubsetEntry(Kind::kFiniteSet, std::move(values));
}

SubsetEntry SubsetEntry::Any() { return SubsetEntry(Kind::kAny, {}); }

bool SubsetEntry::Contains(const Rational& x) const {
  if (kind_ == Kind::kAny) return true;
  return std::binary_search(values_.begin(), values_.end(), x);
}

std::vector<Rational> SubsetEntry::Representatives() const {
  switch (kind_) {
    case Kind::kSingleton:
      return {values_.front()};
    case Kind::kFiniteSet:
      return {values_[0], values_[1]};
    case Kind::kAny:
      return {Rational(0), Rational(1)};
  }
  return {};
}

SubsetMatrix::SubsetMatrix(FieldDescriptor field, Matrix<SubsetEntry> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.rows(); ++i) {
    for (std::size_t j = 0; j < entries_.cols(); ++j) {
      const SubsetEntry& e = entries_(i, j);
      if (e.kind() == SubsetEntry::Kind::kAny && !field_.is_infinite()) {
        throw InvalidValueError(CellName(i, j) + ": \"any\" is not allowed over " +
                                field_.ToString());
      }
      for (const Rational& x : e.values()) field_.CheckElement(x, CellName(i, j));
    }
  }
}

SubsetMatrix SubsetMatrix::Submatrix(std::span<const std::size_t> row_ids,
                                     std::span<const std::size_t> col_ids) const {
  return SubsetMatrix(field_, entries_.Submatrix(row_ids, col_ids));
}

bool SubsetMatrix::Contains(const RationalMatrix& a) const {
  if (a.rows() != rows() || a.cols() != cols()) return false;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!field_.IsElement(a(i, j)) || !entries_(i, j).Contains(a(i, j))) {
        return false;
      }
    }
  }
  return true;
}

void ValidateDiagonal(const SubsetMatrix& alpha, const PgDiagonal& d) {
  std::vector<bool> row_used(alpha.rows(), false);
  std::vector<bool> col_used(alpha.cols(), false);
  for (const Cell& c : d.cells) {
    if (c.row >= alpha.rows() || c.col >= alpha.cols()) {
      throw InvalidDiagonalError(CellName(c.row, c.col) + " is outside the matrix");
    }
    if (row_used[c.row] || col_used[c.col]) {
      throw InvalidDiagonalError(CellName(c.row, c.col) +
                                 " repeats a row or column of the diagonal");
    }
    row_used[c.row] = true;
    col_used[c.col] = true;
  }
}

bool IsTotallyNondegenerate(const SubsetMatrix& alpha, const PgDiagonal& d) {
  for (const Cell& c : d.cells) {
    if (alpha(c.row, c.col).IsDegenerate()) return false;
  }
  return true;
}

SubsetMatrix ComplementaryMatrix(const SubsetMatrix& alpha, const PgDiagonal& d) {
  ValidateDiagonal(alpha, d);
  std::vector<bool> row_used(alpha.rows(), false);
  std::vector<bool> col_used(alpha.cols(), false);
  for (const Cell& c : d.cells) {
    row_used[c.row] = true;
    col_used[c.col] = true;
  }
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    if (!row_used[i]) rows.push_back(i);
  }
  for (std::size_t j = 0; j < alpha.cols(); ++j) {
    if (!col_used[j]) cols.push_back(j);
  }
  return alpha.Submatrix(rows, cols);
}

Rational DetC(const SubsetMatrix& alpha) {
  if (alpha.rows() != alpha.cols()) {
    throw DimensionMismatchError("det^c of a non-square matrix");
  }
  RationalMatrix degenerate_part(alpha.rows(), alpha.cols());
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    for (std::size_t j = 0; j < alpha.cols(); ++j) {
      if (alpha(i, j).IsDegenerate()) degenerate_part(i, j) = alpha(i, j).value();
    }
  }
  return Determinant(degenerate_part, alpha.field());
}

namespace {

// Visits totally nondegenerate diagonals of the given length in
// lexicographic order of their (row, col) sequence, rows ascending. The
// visitor returns true to stop.
class DiagonalEnumerator {
 public:
  DiagonalEnumerator(const SubsetMatrix& alpha, std::uint64_t limit)
      : alpha_(alpha), limit_(limit), col_used_(alpha.cols(), false) {}

  bool Visit(std::size_t length,
             const std::function<bool(const PgDiagonal&)>& visitor) {
    current_.cells.clear();
    return Extend(0, length, visitor);
  }

 private:
  bool Extend(std::size_t first_row, std::size_t length,
              const std::function<bool(const PgDiagonal&)>& visitor) {
    if (current_.cells.size() == length) {
      if (++visited_ > limit_) {
        throw SizeLimitExceededError("more than " + std::to_string(limit_) +
                                     " partial diagonals");
      }
      return visitor(current_);
    }
    const std::size_t remaining = length - current_.cells.size();
    for (std::size_t r = first_row; r + remaining <= alpha_.rows(); ++r) {
      for (std::size_t c = 0; c < alpha_.cols(); ++c) {
        if (col_used_[c] || alpha_(r, c).IsDegenerate()) continue;
        col_used_[c] = true;
        current_.cells.push_back({r, c});
        const bool stop = Extend(r + 1, length, visitor);
        current_.cells.pop_back();
        col_used_[c] = false;
        if (stop) return true;
      }
    }
    return false;
  }

  const SubsetMatrix& alpha_;
  std::uint64_t limit_;
  std::uint64_t visited_ = 0;
  std::vector<bool> col_used_;
  PgDiagonal current_;
};

}  // namespace

SingularityResult StronglySingular(const SubsetMatrix& alpha,
                                   const Budgets& budgets) {
  const std::size_t p = alpha.rows();
  if (p != alpha.cols()) {
    throw DimensionMismatchError("strong singularity of a non-square matrix");
  }
  SingularityResult result;
  DiagonalEnumerator diagonals(alpha, budgets.diagonal_limit);
  if (diagonals.Visit(p, [&](const PgDiagonal& d) {
        result.diagonal = d;
        return true;
      })) {
    return result;
  }
  for (std::size_t length = p; length-- > 0;) {
    if (diagonals.Visit(length, [&](const PgDiagonal& d) {
          Rational value = DetC(ComplementaryMatrix(alpha, d));
          if (value.is_zero()) return false;
          result.diagonal = d;
          result.complement_detc = std::move(value);
          return true;
        })) {
      return result;
    }
  }
  result.strongly_singular = true;
  return result;
}

namespace {

// Calls visit on each k-subset of [0, n) in lexicographic order until it
// returns true.
bool ForEachCombination(std::size_t n, std::size_t k,
                        const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> combo(k);
  for (std::size_t t = 0; t < k; ++t) combo[t] = t;
  while (true) {
    if (visit(combo)) return true;
    std::size_t t = k;
    while (t > 0 && combo[t - 1] == n - k + t - 1) --t;
    if (t == 0) return false;
    ++combo[t - 1];
    for (std::size_t s = t; s < k; ++s) combo[s] = combo[s - 1] + 1;
  }
}

}  // namespace

MaxRankResult MaxRank(const SubsetMatrix& alpha, const Budgets& budgets) {
  MaxRankResult result;
  for (std::size_t t = std::min(alpha.rows(), alpha.cols()); t > 0; --t) {
    const bool found = ForEachCombination(alpha.rows(), t, [&](const auto& rows) {
      return ForEachCombination(alpha.cols(), t, [&](const auto& cols) {
        const SingularityResult s =
            StronglySingular(alpha.Submatrix(rows, cols), budgets);
        if (s.strongly_singular) return false;
        result.rank = t;
        result.rows = rows;
        result.cols = cols;
        result.diagonal = *s.diagonal;
        return true;
      });
    });
    if (found) return result;
  }
  return result;
}

RationalMatrix MaxRankWitness(const SubsetMatrix& alpha, const Budgets& budgets) {
  return MaxRankWitness(alpha, MaxRank(alpha, budgets), budgets);
}

RationalMatrix MaxRankWitness(const SubsetMatrix& alpha,
                              const MaxRankResult& certificate,
                              const Budgets& budgets) {
  RationalMatrix out(alpha.rows(), alpha.cols());
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    for (std::size_t j = 0; j < alpha.cols(); ++j) {
      out(i, j) = alpha(i, j).Representatives().front();
    }
  }
  const std::size_t t = certificate.rank;
  if (t == 0) return out;

  std::vector<Cell> free_cells;
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = 0; b < t; ++b) {
      if (!alpha(certificate.rows[a], certificate.cols[b]).IsDegenerate()) {
        free_cells.push_back({a, b});
      }
    }
  }
  if (free_cells.size() >= 63 ||
      (std::uint64_t{1} << free_cells.size()) > budgets.grid_limit) {
    throw SizeLimitExceededError("representative grid of 2^" +
                                 std::to_string(free_cells.size()) +
                                 " points exceeds the grid limit");
  }
  RationalMatrix sub(t, t);
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = 0; b < t; ++b) {
      sub(a, b) = out(certificate.rows[a], certificate.cols[b]);
    }
  }
  // The determinant is affine in each free cell, so it is nonzero somewhere
  // on the grid of two representatives per cell iff it is not identically 0.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_cells.size());
       ++mask) {
    for (std::size_t k = 0; k < free_cells.size(); ++k) {
      const Cell c = free_cells[k];
      sub(c.row, c.col) = alpha(certificate.rows[c.row], certificate.cols[c.col])
                              .Representatives()[(mask >> k) & 1];
    }
    if (Determinant(sub, alpha.field()).is_zero()) continue;
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = 0; b < t; ++b) {
        out(certificate.rows[a], certificate.cols[b]) = sub(a, b);
      }
    }
    if (ExactRank(out, alpha.field()) != t) {
      throw std::logic_error("maximal-rank witness has the wrong rank");
    }
    return out;
  }
  throw std::logic_error("certified submatrix has no nonsingular grid point");
}

SubsetMatrix IntervalAsSubset(const IntervalMatrix& alpha) {
  Matrix<SubsetEntry> entries(alpha.rows(), alpha.cols());
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    for (std::size_t j = 0; j < alpha.cols(); ++j) {
      const Interval& x = alpha(i, j);
      entries(i, j) = x.IsDegenerate() ? SubsetEntry::Singleton(x.lo())
                                       : SubsetEntry::FiniteSet({x.lo(), x.hi()});
    }
  }
  return SubsetMatrix(FieldDescriptor::Rationals(), std::move(entries));
}

std::size_t BruteForceMaxRank(const SubsetMatrix& alpha, const Budgets& budgets) {
  const std::size_t p = alpha.rows();
  const std::size_t q = alpha.cols();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (alpha(i, j).kind() == SubsetEntry::Kind::kAny) {
        throw PreconditionError(CellName(i, j) + " is not a finite set");
      }
      total *= alpha(i, j).values().size();
      if (total > budgets.grid_limit) {
        throw SizeLimitExceededError("more than " +
                                     std::to_string(budgets.grid_limit) +
                                     " realizations");
      }
    }
  }
  const std::size_t ceiling = std::min(p, q);
  std::vector<std::size_t> digit(p * q, 0);
  RationalMatrix a(p, q);
  std::size_t best = 0;
  while (true) {
    for (std::size_t k = 0; k < p * q; ++k) {
      a(k / q, k % q) = alpha(k / q, k % q).values()[digit[k]];
    }
    best = std::max(best, ExactRank(a, alpha.field()));
    if (best == ceiling) return best;
    std::size_t k = 0;
    while (k < p * q && ++digit[k] == alpha(k / q, k % q).values().size()) {
      digit[k++] = 0;
    }
    if (k == p * q) return best;
  }
}

}  // namespace irank
