#include "irank/full_rank.h"

#include <stdexcept>
#include <string>
#include <utility>

#include "irank/errors.h"
#include "irank/fourier_motzkin.h"
#include "irank/linalg.h"

namespace irank {

SignVector::SignVector(std::vector<int> components)
    : components_(std::move(components)) {
  for (int c : components_) {
    if (c != 1 && c != -1) {
      throw InvalidValueError("sign component " + std::to_string(c) +
                              " is not +1 or -1");
    }
  }
}

SignVector SignVector::FromBits(std::uint64_t bits, std::size_t length) {
  std::vector<int> components(length);
  for (std::size_t k = 0; k < length; ++k) {
    components[k] = ((bits >> k) & 1) ? -1 : 1;
  }
  return SignVector(std::move(components));
}

SignVector SignVector::Negated() const {
  std::vector<int> out = components_;
  for (int& c : out) c = -c;
  return SignVector(std::move(out));
}

namespace {

void CheckBudget(std::size_t exponent, std::uint64_t limit, const char* what) {
  if (exponent >= 63 || (std::uint64_t{1} << exponent) > limit) {
    throw SizeLimitExceededError(std::string(what) + ": 2^" +
                                 std::to_string(exponent) +
                                 " cases exceed the limit of " +
                                 std::to_string(limit));
  }
}

}  // namespace

RationalMatrix RohnVertexMatrix(const MidRadMod& parts, const SignVector& x,
                                const SignVector& y) {
  RationalMatrix out = parts.mid;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      if (x[i] * y[j] > 0) {
        out(i, j) -= parts.rad(i, j);
      } else {
        out(i, j) += parts.rad(i, j);
      }
    }
  }
  return out;
}

RohnResult RohnSquareFullRank(const IntervalMatrix& alpha,
                              const Budgets& budgets) {
  const std::size_t p = alpha.rows();
  if (p != alpha.cols() || p == 0) {
    throw PreconditionError("square test needs a nonempty square matrix, got " +
                            std::to_string(alpha.rows()) + "x" +
                            std::to_string(alpha.cols()));
  }
  CheckBudget(2 * p - 1, budgets.orthant_limit, "sign pairs");
  const MidRadMod parts = ComputeMidRadMod(alpha);
  RohnResult result;
  result.det_mid = Determinant(parts.mid);
  // x(0) = +1 is fixed, so x ranges over even bit patterns.
  for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << p); xb += 2) {
    const SignVector x = SignVector::FromBits(xb, p);
    for (std::uint64_t yb = 0; yb < (std::uint64_t{1} << p); ++yb) {
      const SignVector y = SignVector::FromBits(yb, p);
      const Rational det = Determinant(RohnVertexMatrix(parts, x, y));
      if ((result.det_mid * det).sign() <= 0) {
        result.full_rank = false;
        result.violating_x = x;
        result.violating_y = y;
        result.violating_det = det;
        return result;
      }
    }
  }
  result.full_rank = true;
  return result;
}

std::optional<NullPair> SearchOrthant(const IntervalMatrix& alpha,
                                      const MidRadMod& parts,
                                      const SignVector& s,
                                      const Budgets& budgets) {
  const std::size_t p = alpha.rows();
  const std::size_t q = alpha.cols();
  LinearSystem system(q);
  for (std::size_t j = 0; j < q; ++j) {
    RationalVector e(q);
    e[j] = Rational(s[j]);
    system.AddGreaterEqual(std::move(e), Rational(0));
  }
  for (std::size_t i = 0; i < p; ++i) {
    // (mid_i - rad_i o s) . x <= 0 and (-mid_i - rad_i o s) . x <= 0.
    RationalVector upper(q);
    RationalVector lower(q);
    for (std::size_t j = 0; j < q; ++j) {
      const Rational signed_rad = parts.rad(i, j) * Rational(s[j]);
      upper[j] = parts.mid(i, j) - signed_rad;
      lower[j] = -parts.mid(i, j) - signed_rad;
    }
    system.AddLessEqual(std::move(upper), Rational(0));
    system.AddLessEqual(std::move(lower), Rational(0));
  }
  RationalVector normal(q);
  for (std::size_t j = 0; j < q; ++j) normal[j] = Rational(s[j]);
  system.AddEqual(std::move(normal), Rational(1));

  std::optional<RationalVector> x =
      FourierMotzkinFeasible(system, budgets.elimination_limit);
  if (!x) return std::nullopt;

  NullPair pair{*x, parts.mid, s, RationalVector(p)};
  for (std::size_t i = 0; i < p; ++i) {
    Rational mid_dot;
    Rational rad_dot;
    for (std::size_t j = 0; j < q; ++j) {
      mid_dot += parts.mid(i, j) * (*x)[j];
      rad_dot += parts.rad(i, j) * (*x)[j].abs();
    }
    // Feasibility forces mid_dot = 0 whenever rad_dot = 0.
    const Rational d = rad_dot.is_zero() ? Rational(0) : mid_dot / rad_dot;
    pair.d[i] = d;
    for (std::size_t j = 0; j < q; ++j) {
      pair.a(i, j) -= d * parts.rad(i, j) * Rational(s[j]);
    }
  }
  if (!VerifyNullPair(alpha, pair.x, pair.a)) {
    throw std::logic_error("constructed null pair failed verification");
  }
  return pair;
}

std::optional<NullPair> NullPairSearch(const IntervalMatrix& alpha,
                                       const Budgets& budgets) {
  const std::size_t q = alpha.cols();
  if (alpha.rows() < q || q == 0) {
    throw PreconditionError("null-vector search needs rows >= cols > 0, got " +
                            std::to_string(alpha.rows()) + "x" +
                            std::to_string(q));
  }
  CheckBudget(q - 1, budgets.orthant_limit, "orthants");
  const MidRadMod parts = ComputeMidRadMod(alpha);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << q); bits += 2) {
    if (auto pair = SearchOrthant(alpha, parts, SignVector::FromBits(bits, q),
                                  budgets)) {
      return pair;
    }
  }
  return std::nullopt;
}

bool FullRankRectangular(const IntervalMatrix& alpha, const Budgets& budgets) {
  if (alpha.rows() < alpha.cols()) {
    return !NullPairSearch(alpha.Transposed(), budgets).has_value();
  }
  return !NullPairSearch(alpha, budgets).has_value();
}

std::optional<RationalMatrix> RankDeficientRationalWitness(
    const IntervalMatrix& alpha, const Budgets& budgets) {
  std::optional<NullPair> pair = NullPairSearch(alpha, budgets);
  if (!pair) return std::nullopt;
  return std::move(pair->a);
}

bool VerifyNullPair(const IntervalMatrix& alpha, const RationalVector& x,
                    const RationalMatrix& a) {
  if (a.rows() != alpha.rows() || a.cols() != alpha.cols() ||
      x.size() != a.cols()) {
    return false;
  }
  bool nonzero = false;
  for (const Rational& v : x) nonzero |= !v.is_zero();
  if (!nonzero || !Contains(alpha, a)) return false;
  for (const Rational& v : Multiply(a, x)) {
    if (!v.is_zero()) return false;
  }
  return true;
}

}  // namespace irank
