#ifndef IRANK_FIELD_H_
#define IRANK_FIELD_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "irank/rational.h"

namespace irank {

// Either the rationals or a prime field GF(p). Elements of GF(p) are carried
// as integer-valued Rationals in [0, p).
class FieldDescriptor {
 public:
  // Largest accepted modulus; keeps residue products inside 64 bits.
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

  static FieldDescriptor Rationals() { return FieldDescriptor(0); }
  // Throws InvalidValueError unless modulus is a prime <= kMaxModulus.
  static FieldDescriptor PrimeField(std::uint64_t modulus);
  // "Q" or "GF:<prime>".
  static FieldDescriptor Parse(std::string_view text);

  bool is_prime_field() const { return modulus_ != 0; }
  bool is_infinite() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }

  std::string ToString() const;

  bool IsElement(const Rational& x) const;
  // Throws InvalidValueError naming `where` if x is not an element.
  void CheckElement(const Rational& x, const std::string& where) const;

  Rational Add(const Rational& a, const Rational& b) const;
  Rational Sub(const Rational& a, const Rational& b) const;
  Rational Mul(const Rational& a, const Rational& b) const;
  Rational Neg(const Rational& a) const;

  friend bool operator==(const FieldDescriptor&,
                         const FieldDescriptor&) = default;

 private:
  explicit FieldDescriptor(std::uint64_t modulus) : modulus_(modulus) {}

  Rational Residue(const mpz_class& value) const;

  std::uint64_t modulus_ = 0;
};

bool IsPrime(std::uint64_t n);

}  // namespace irank

#endif  // IRANK_FIELD_H_
