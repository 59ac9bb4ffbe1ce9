#include "irank/linalg.h"

#include <cstdint>
#include <string>
#include <vector>

#include "irank/errors.h"

namespace irank {
namespace {

struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> data;
  // Product of the per-row denominator multipliers.
  mpz_class scale = 1;

  mpz_class& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
};

IntegerMatrix ClearDenominators(const RationalMatrix& m) {
  IntegerMatrix out{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols()), 1};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class multiplier = 1;
    for (const Rational& x : m.row(i)) {
      mpz_lcm(multiplier.get_mpz_t(), multiplier.get_mpz_t(),
              x.gmp().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& x = m(i, j).gmp();
      out.at(i, j) = x.get_num() * (multiplier / x.get_den());
    }
    out.scale *= multiplier;
  }
  return out;
}

struct Elimination {
  std::size_t rank = 0;
  int swap_sign = 1;
  mpz_class last_pivot = 1;
};

// Fraction-free elimination; a column with no pivot is skipped, which leaves
// the remaining steps identical to Bareiss on the matrix without it.
Elimination Bareiss(IntegerMatrix& m) {
  Elimination result;
  mpz_class previous = 1;
  for (std::size_t c = 0; c < m.cols && result.rank < m.rows; ++c) {
    const std::size_t r = result.rank;
    std::size_t pivot = r;
    while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols; ++j) swap(m.at(pivot, j), m.at(r, j));
      result.swap_sign = -result.swap_sign;
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        mpz_class value = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(),
                     previous.get_mpz_t());
        m.at(i, j) = std::move(value);
      }
      m.at(i, c) = 0;
    }
    previous = m.at(r, c);
    result.last_pivot = previous;
    ++result.rank;
  }
  return result;
}

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

struct ModularElimination {
  std::size_t rank = 0;
  std::uint64_t det = 1;
};

ModularElimination EliminateModP(const RationalMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      a[i * cols + j] = m(i, j).numerator().get_ui() % p;
    }
  }
  ModularElimination result;
  for (std::size_t c = 0; c < cols && result.rank < rows; ++c) {
    const std::size_t r = result.rank;
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) {
      result.det = 0;
      continue;
    }
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(a[pivot * cols + j], a[r * cols + j]);
      }
      result.det = (p - result.det) % p;
    }
    const std::uint64_t pv = a[r * cols + c];
    result.det = result.det * pv % p;
    const std::uint64_t inv = PowMod(pv, p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t factor = a[i * cols + c] * inv % p;
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] =
            (a[i * cols + j] + (p - factor) * a[r * cols + j]) % p;
      }
    }
    ++result.rank;
  }
  return result;
}

void CheckEntries(const RationalMatrix& m, const FieldDescriptor& field) {
  if (!field.is_prime_field()) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      field.CheckElement(m(i, j), CellName(i, j));
    }
  }
}

}  // namespace

std::size_t ExactRank(const RationalMatrix& m, const FieldDescriptor& field) {
  if (m.empty()) return 0;
  CheckEntries(m, field);
  if (field.is_prime_field()) return EliminateModP(m, field.modulus()).rank;
  IntegerMatrix integers = ClearDenominators(m);
  return Bareiss(integers).rank;
}

Rational Determinant(const RationalMatrix& m, const FieldDescriptor& field) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError("determinant of a " + std::to_string(m.rows()) +
                                 "x" + std::to_string(m.cols()) + " matrix");
  }
  if (m.rows() == 0) return Rational(1);
  CheckEntries(m, field);
  if (field.is_prime_field()) {
    const ModularElimination e = EliminateModP(m, field.modulus());
    if (e.rank < m.rows()) return Rational(0);
    return Rational(mpz_class(static_cast<unsigned long>(e.det)), 1);
  }
  IntegerMatrix integers = ClearDenominators(m);
  const Elimination e = Bareiss(integers);
  if (e.rank < m.rows()) return Rational(0);
  return Rational(e.swap_sign * e.last_pivot, integers.scale);
}

}  // namespace irank
