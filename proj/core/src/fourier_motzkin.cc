#include "irank/fourier_motzkin.h"

#include <bit>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "irank/errors.h"

namespace irank {

void LinearSystem::Add(RationalVector coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != num_vars_) {
    throw DimensionMismatchError("constraint has " +
                                 std::to_string(coeffs.size()) +
                                 " coefficients for " +
                                 std::to_string(num_vars_) + " variables");
  }
  constraints_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearSystem::AddGreaterEqual(RationalVector coeffs, const Rational& rhs) {
  for (Rational& c : coeffs) c = -c;
  AddLessEqual(std::move(coeffs), -rhs);
}

bool LinearSystem::IsSatisfiedBy(const RationalVector& x) const {
  if (x.size() != num_vars_) return false;
  for (const LinearConstraint& c : constraints_) {
    Rational lhs;
    for (std::size_t j = 0; j < num_vars_; ++j) lhs += c.coeffs[j] * x[j];
    if (c.relation == Relation::kEqual ? lhs != c.rhs : lhs > c.rhs) {
      return false;
    }
  }
  return true;
}

namespace {

// Set of original inequality indices a derived inequality combines.
class History {
 public:
  History() = default;
  History(std::size_t size, std::size_t index) : words_((size + 63) / 64, 0) {
    words_[index / 64] |= std::uint64_t{1} << (index % 64);
  }

  History Union(const History& other) const {
    History out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
    return out;
  }

  bool IsSubsetOf(const History& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  std::size_t Count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Bound {
  Rational rhs;
  History history;
};

// a . x <= b, keyed by the normal vector scaled so that its first nonzero
// coefficient is +1 or -1. Per normal, a bound is dropped only when another
// is at least as tight and combines a subset of its originals, which keeps
// the history-based pruning sound.
using InequalitySet = std::map<RationalVector, std::vector<Bound>>;

// Returns false if the inequality has no coefficients and is violated.
bool Insert(InequalitySet& set, RationalVector coeffs, Rational rhs, History history) {
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
  if (lead == coeffs.size()) return rhs.sign() >= 0;
  const Rational scale = coeffs[lead].abs();
  for (Rational& c : coeffs) c /= scale;
  rhs /= scale;
  std::vector<Bound>& bounds = set[std::move(coeffs)];
  for (const Bound& b : bounds) {
    if (b.rhs <= rhs && b.history.IsSubsetOf(history)) return true;
  }
  std::erase_if(bounds, [&](const Bound& b) {
    return rhs <= b.rhs && history.IsSubsetOf(b.history);
  });
  bounds.push_back(Bound{std::move(rhs), std::move(history)});
  return true;
}

// Equality solved for one variable: x[pivot] = (rhs - coeffs . x) / coeffs[pivot]
// with the pivot term excluded from the dot product.
struct Substitution {
  std::size_t pivot = 0;
  RationalVector coeffs;
  Rational rhs;
};

// Replaces x[sub.pivot] in c . x (<= | =) b.
void Substitute(RationalVector& c, Rational& b, const Substitution& sub) {
  const Rational factor = c[sub.pivot] / sub.coeffs[sub.pivot];
  if (factor.is_zero()) return;
  for (std::size_t j = 0; j < c.size(); ++j) c[j] -= factor * sub.coeffs[j];
  c[sub.pivot] = Rational(0);
  b -= factor * sub.rhs;
}

}  // namespace

std::optional<RationalVector> FourierMotzkinFeasible(
    const LinearSystem& system, std::uint64_t constraint_limit) {
  const std::size_t n = system.num_vars();

  // Equalities are eliminated by substitution, pivoting on the last
  // nonzero coefficient.
  std::vector<Substitution> subs;
  for (const LinearConstraint& c : system.constraints()) {
    if (c.relation != Relation::kEqual) continue;
    RationalVector coeffs = c.coeffs;
    Rational rhs = c.rhs;
    for (const Substitution& sub : subs) Substitute(coeffs, rhs, sub);
    std::size_t pivot = n;
    for (std::size_t j = n; j > 0; --j) {
      if (!coeffs[j - 1].is_zero()) {
        pivot = j - 1;
        break;
      }
    }
    if (pivot == n) {
      if (!rhs.is_zero()) return std::nullopt;
      continue;
    }
    subs.push_back({pivot, std::move(coeffs), std::move(rhs)});
  }

  std::vector<std::pair<RationalVector, Rational>> inequalities;
  for (const LinearConstraint& c : system.constraints()) {
    if (c.relation == Relation::kEqual) continue;
    RationalVector coeffs = c.coeffs;
    Rational rhs = c.rhs;
    for (const Substitution& sub : subs) Substitute(coeffs, rhs, sub);
    inequalities.emplace_back(std::move(coeffs), std::move(rhs));
  }

  // stages[k] involves only variables 0..k-1.
  std::vector<InequalitySet> stages(n + 1);
  for (std::size_t k = 0; k < inequalities.size(); ++k) {
    auto& [coeffs, rhs] = inequalities[k];
    if (!Insert(stages[n], coeffs, rhs, History(inequalities.size(), k))) {
      return std::nullopt;
    }
  }

  std::size_t eliminated = 0;
  for (std::size_t k = n; k > 0; --k) {
    const std::size_t var = k - 1;
    using Row = std::pair<const RationalVector*, const Bound*>;
    std::vector<Row> upper;
    std::vector<Row> lower;
    InequalitySet& next = stages[k - 1];
    for (const auto& [coeffs, bounds] : stages[k]) {
      const int s = coeffs[var].sign();
      for (const Bound& b : bounds) {
        if (s > 0) {
          upper.emplace_back(&coeffs, &b);
        } else if (s < 0) {
          lower.emplace_back(&coeffs, &b);
        } else if (!Insert(next, coeffs, b.rhs, b.history)) {
          return std::nullopt;
        }
      }
    }
    if (upper.empty() && lower.empty()) continue;
    ++eliminated;
    for (const auto& [up_coeffs, up_bound] : upper) {
      for (const auto& [lo_coeffs, lo_bound] : lower) {
        // Chernikov: combinations of more than eliminated + 1 originals are
        // implied by the others.
        History history = up_bound->history.Union(lo_bound->history);
        if (history.Count() > eliminated + 1) continue;
        // up: u x_var + ... <= bu with u > 0; lo: -l x_var + ... <= bl.
        const Rational& u = (*up_coeffs)[var];
        const Rational l = -(*lo_coeffs)[var];
        RationalVector combined(n);
        for (std::size_t j = 0; j < var; ++j) {
          combined[j] = l * (*up_coeffs)[j] + u * (*lo_coeffs)[j];
        }
        if (!Insert(next, std::move(combined), l * up_bound->rhs + u * lo_bound->rhs,
                    std::move(history))) {
          return std::nullopt;
        }
        if (next.size() > constraint_limit) {
          throw EliminationBlowupError(
              "Fourier-Motzkin elimination exceeded " +
              std::to_string(constraint_limit) + " constraints");
        }
      }
    }
  }

  RationalVector x(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t var = k - 1;
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const auto& [coeffs, bounds] : stages[k]) {
      const Rational& a = coeffs[var];
      if (a.is_zero()) continue;
      Rational dot;
      for (std::size_t j = 0; j < var; ++j) dot += coeffs[j] * x[j];
      for (const Bound& bound : bounds) {
        const Rational value = (bound.rhs - dot) / a;
        if (a.sign() > 0) {
          if (!hi || value < *hi) hi = value;
        } else if (!lo || value > *lo) {
          lo = value;
        }
      }
    }
    x[var] = SimplestBetween(lo, hi);
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    Rational rest = it->rhs;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != it->pivot) rest -= it->coeffs[j] * x[j];
    }
    x[it->pivot] = rest / it->coeffs[it->pivot];
  }
  return x;
}

std::optional<RationalVector> RationalKernelPointInBox(
    const RationalMatrix& a, const std::vector<Interval>& box,
    std::uint64_t constraint_limit) {
  if (box.size() != a.cols()) {
    throw DimensionMismatchError("box has " + std::to_string(box.size()) +
                                 " edges for " + std::to_string(a.cols()) +
                                 " columns");
  }
  const std::size_t n = a.cols();
  LinearSystem system(n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    system.AddEqual(RationalVector(a.row(i).begin(), a.row(i).end()),
                    Rational(0));
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n);
    e[j] = Rational(1);
    system.AddGreaterEqual(e, box[j].lo());
    system.AddLessEqual(e, box[j].hi());
  }
  return FourierMotzkinFeasible(system, constraint_limit);
}

}  // namespace irank
