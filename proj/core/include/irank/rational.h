#ifndef IRANK_RATIONAL_H_
#define IRANK_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace irank {

// Arbitrary-precision fraction, always kept in canonical form (positive
// denominator, coprime numerator and denominator). All scalar work in the
// library goes through this type.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpq_class& value);

  // Text grammar: optional sign, decimal digits, optionally "/" and a
  // decimal denominator, e.g. "-3/2" or "7". Throws ParseError on grammar
  // violations and InvalidValueError on a zero denominator.
  static Rational Parse(std::string_view text);

  std::string ToString() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& gmp() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  // Throws DivisorContainsZeroError for zero.
  Rational inverse() const;
  mpz_class floor() const;
  mpz_class ceil() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

const Rational& Min(const Rational& a, const Rational& b);
const Rational& Max(const Rational& a, const Rational& b);

// The rational with the smallest denominator (then smallest absolute
// numerator) in the closed range [lower, upper]; a missing end means
// unbounded. Requires lower <= upper when both are present.
Rational SimplestBetween(const std::optional<Rational>& lower,
                         const std::optional<Rational>& upper);

}  // namespace irank

#endif  // IRANK_RATIONAL_H_
