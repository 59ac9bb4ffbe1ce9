#include "irank/interval.h"

#include <algorithm>
#include <array>
#include <utility>

#include "irank/errors.h"

namespace irank {

Interval::Interval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw InvalidValueError("interval lower endpoint " + lo_.ToString() +
                            " exceeds upper endpoint " + hi_.ToString());
  }
}

Rational Interval::Mid() const { return (lo_ + hi_) / Rational(2); }

Rational Interval::Rad() const { return (hi_ - lo_) / Rational(2); }

Rational Interval::Mag() const { return Max(lo_.abs(), hi_.abs()); }

std::string Interval::ToString() const {
  return "[" + lo_.ToString() + ", " + hi_.ToString() + "]";
}

Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo() + b.lo(), a.hi() + b.hi()};
}

Interval operator-(const Interval& a) { return {-a.hi(), -a.lo()}; }

Interval operator*(const Interval& a, const Interval& b) {
  const std::array<Rational, 4> products = {a.lo() * b.lo(), a.lo() * b.hi(),
                                            a.hi() * b.lo(), a.hi() * b.hi()};
  const auto [lo, hi] = std::minmax_element(products.begin(), products.end());
  return {*lo, *hi};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.ContainsZero()) {
    throw DivisorContainsZeroError("divisor " + b.ToString() +
                                   " contains zero");
  }
  // 1/y is monotone decreasing on a sign-definite range.
  return a * Interval(b.hi().inverse(), b.lo().inverse());
}

std::ostream& operator<<(std::ostream& os, const Interval& interval) {
  return os << interval.ToString();
}

}  // namespace irank
