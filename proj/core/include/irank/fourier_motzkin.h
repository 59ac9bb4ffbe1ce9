#ifndef IRANK_FOURIER_MOTZKIN_H_
#define IRANK_FOURIER_MOTZKIN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "irank/interval.h"
#include "irank/matrix.h"

namespace irank {

enum class Relation { kLessEqual, kEqual };

// coeffs . x  (<= | =)  rhs
struct LinearConstraint {
  RationalVector coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

class LinearSystem {
 public:
  explicit LinearSystem(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }

  // Throws DimensionMismatchError if coeffs has the wrong length.
  void Add(RationalVector coeffs, Relation relation, Rational rhs);
  void AddLessEqual(RationalVector coeffs, Rational rhs) {
    Add(std::move(coeffs), Relation::kLessEqual, std::move(rhs));
  }
  void AddGreaterEqual(RationalVector coeffs, const Rational& rhs);
  void AddEqual(RationalVector coeffs, Rational rhs) {
    Add(std::move(coeffs), Relation::kEqual, std::move(rhs));
  }

  bool IsSatisfiedBy(const RationalVector& x) const;

 private:
  std::size_t num_vars_;
  std::vector<LinearConstraint> constraints_;
};

// Exact Fourier-Motzkin elimination. Returns a rational feasible point or
// nullopt when the system has no real solution. Equalities enter as pairs of
// opposite inequalities. Back-substitution picks, for each variable, the
// simplest rational inside its admissible range.
// Throws EliminationBlowupError when more than `constraint_limit` distinct
// constraints are alive after an elimination step.
std::optional<RationalVector> FourierMotzkinFeasible(
    const LinearSystem& system, std::uint64_t constraint_limit);

// Rational x with A x = 0 and x(j) in box[j] for every j, or nullopt if no
// real such x exists.
std::optional<RationalVector> RationalKernelPointInBox(
    const RationalMatrix& a, const std::vector<Interval>& box,
    std::uint64_t constraint_limit);

}  // namespace irank

#endif  // IRANK_FOURIER_MOTZKIN_H_
