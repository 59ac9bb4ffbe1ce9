#include "irank/field.h"

#include <string>

#include "irank/errors.h"

namespace irank {

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::PrimeField(std::uint64_t modulus) {
  if (modulus > kMaxModulus || !IsPrime(modulus)) {
    throw InvalidValueError("field modulus " + std::to_string(modulus) +
                            " is not a supported prime");
  }
  return FieldDescriptor(modulus);
}

FieldDescriptor FieldDescriptor::Parse(std::string_view text) {
  if (text == "Q") return Rationals();
  constexpr std::string_view kPrefix = "GF:";
  if (text.substr(0, kPrefix.size()) != kPrefix) {
    throw ParseError("unknown field \"" + std::string(text) + "\"");
  }
  const Rational modulus = Rational::Parse(text.substr(kPrefix.size()));
  if (!modulus.is_integer() || modulus.sign() <= 0 ||
      modulus.numerator() > mpz_class(static_cast<unsigned long>(kMaxModulus))) {
    throw InvalidValueError("field modulus in \"" + std::string(text) +
                            "\" is not a supported prime");
  }
  return PrimeField(modulus.numerator().get_ui());
}

std::string FieldDescriptor::ToString() const {
  return is_prime_field() ? "GF:" + std::to_string(modulus_) : "Q";
}

bool FieldDescriptor::IsElement(const Rational& x) const {
  if (!is_prime_field()) return true;
  return x.is_integer() && x.sign() >= 0 &&
         x.numerator() < mpz_class(static_cast<unsigned long>(modulus_));
}

void FieldDescriptor::CheckElement(const Rational& x,
                                   const std::string& where) const {
  if (!IsElement(x)) {
    throw InvalidValueError(where + ": " + x.ToString() +
                            " is not an element of " + ToString());
  }
}

Rational FieldDescriptor::Residue(const mpz_class& value) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), modulus_);
  return Rational(r, 1);
}

Rational FieldDescriptor::Add(const Rational& a, const Rational& b) const {
  if (!is_prime_field()) return a + b;
  return Residue(a.numerator() + b.numerator());
}

Rational FieldDescriptor::Sub(const Rational& a, const Rational& b) const {
  if (!is_prime_field()) return a - b;
  return Residue(a.numerator() - b.numerator());
}

Rational FieldDescriptor::Mul(const Rational& a, const Rational& b) const {
  if (!is_prime_field()) return a * b;
  return Residue(a.numerator() * b.numerator());
}

Rational FieldDescriptor::Neg(const Rational& a) const {
  if (!is_prime_field()) return -a;
  return Residue(-a.numerator());
}

}  // namespace irank
