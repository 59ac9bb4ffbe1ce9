#ifndef IRANK_INTERVAL_H_
#define IRANK_INTERVAL_H_

#include <ostream>
#include <string>

#include "irank/rational.h"

namespace irank {

// Closed interval [lo, hi] with rational endpoints and lo <= hi.
class Interval {
 public:
  Interval() = default;
  // Throws InvalidValueError when lo > hi.
  Interval(Rational lo, Rational hi);
  static Interval Point(const Rational& value) { return {value, value}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool IsDegenerate() const { return lo_ == hi_; }
  bool Contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool ContainsZero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  // lo < 0 < hi.
  bool StraddlesZero() const { return lo_.sign() < 0 && hi_.sign() > 0; }
  bool IsNonnegative() const { return lo_.sign() >= 0; }
  bool IsNonpositive() const { return hi_.sign() <= 0; }
  bool IsSubsetOf(const Interval& other) const {
    return other.lo_ <= lo_ && hi_ <= other.hi_;
  }

  Rational Mid() const;
  Rational Rad() const;
  // max(|lo|, |hi|).
  Rational Mag() const;

  std::string ToString() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// Requires 0 outside b; throws DivisorContainsZeroError otherwise.
Interval operator/(const Interval& a, const Interval& b);

std::ostream& operator<<(std::ostream& os, const Interval& interval);

}  // namespace irank

#endif  // IRANK_INTERVAL_H_
