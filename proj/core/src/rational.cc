#include "irank/rational.h"

#include <cctype>
#include <string>

#include "irank/errors.h"

namespace irank {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return "Parse";
    case ErrorKind::kInvalidValue:
      return "InvalidValue";
    case ErrorKind::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorKind::kDivisorContainsZero:
      return "DivisorContainsZero";
    case ErrorKind::kZeroScale:
      return "ZeroScale";
    case ErrorKind::kPreconditionViolated:
      return "PreconditionViolated";
    case ErrorKind::kInvalidDiagonal:
      return "InvalidDiagonal";
    case ErrorKind::kSizeLimitExceeded:
      return "SizeLimitExceeded";
    case ErrorKind::kEliminationBlowup:
      return "EliminationBlowup";
  }
  return "Unknown";
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw InvalidValueError("zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  value_.canonicalize();
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!AllDigits(num_text) || !AllDigits(den_text)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class num(std::string(num_text), 10);
  const mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw InvalidValueError("zero denominator in \"" + std::string(text) +
                            "\"");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::ToString() const { return value_.get_str(10); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisorContainsZeroError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

mpz_class Rational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

mpz_class Rational::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DivisorContainsZeroError("division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

const Rational& Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

const Rational& Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

namespace {

// Stern-Brocot descent for 0 < lo <= hi.
Rational SimplestPositive(const Rational& lo, const Rational& hi) {
  if (lo.is_integer()) return lo;
  const mpz_class up = lo.ceil();
  if (Rational(up, 1) <= hi) return Rational(up, 1);
  const Rational whole(lo.floor(), 1);
  // No integer in [lo, hi]: recurse on the reciprocals of the fractional
  // parts, which reverses the order.
  const Rational inner =
      SimplestPositive((hi - whole).inverse(), (lo - whole).inverse());
  return whole + inner.inverse();
}

}  // namespace

Rational SimplestBetween(const std::optional<Rational>& lower,
                         const std::optional<Rational>& upper) {
  const Rational zero;
  if (lower && upper) {
    if (*lower <= zero && zero <= *upper) return zero;
    if (*upper < zero) return -SimplestPositive(-*upper, -*lower);
    return SimplestPositive(*lower, *upper);
  }
  if (lower) {
    return *lower <= zero ? zero : Rational(lower->ceil(), 1);
  }
  if (upper) {
    return *upper >= zero ? zero : Rational(upper->floor(), 1);
  }
  return zero;
}

}  // namespace irank
