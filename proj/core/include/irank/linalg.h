#ifndef IRANK_LINALG_H_
#define IRANK_LINALG_H_

#include <cstddef>

#include "irank/field.h"
#include "irank/matrix.h"

namespace irank {

// Exact rank. Over Q rows are cleared of denominators and reduced with
// fraction-free (Bareiss) elimination; over GF(p) by modular elimination.
// Entries must be elements of `field`.
std::size_t ExactRank(const RationalMatrix& m,
                      const FieldDescriptor& field = FieldDescriptor::Rationals());

// Exact determinant of a square matrix; the 0x0 determinant is 1.
// Throws DimensionMismatchError for non-square input.
Rational Determinant(const RationalMatrix& m,
                     const FieldDescriptor& field = FieldDescriptor::Rationals());

}  // namespace irank

#endif  // IRANK_LINALG_H_
