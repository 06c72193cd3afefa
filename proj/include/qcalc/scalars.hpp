#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qcalc {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses an integer, ratio ("3/4") or exact decimal literal.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;
  Rational pow(std::int64_t exponent) const;

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;
  /// Decimal approximation with the given number of significant digits.
  std::string approx(int digits = 12) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

/// Parses an exact decimal literal: optional sign, digits, optional fraction,
/// optional exponent "E[+-]digits". No rounding takes place.
Rational rational_from_decimal(std::string_view text);

/// Element of the ring Z/mZ, m >= 2. Composite moduli have zero divisors.
class ModInt {
 public:
  ModInt(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  friend ModInt operator+(const ModInt& a, const ModInt& b);
  friend ModInt operator-(const ModInt& a, const ModInt& b);
  friend ModInt operator*(const ModInt& a, const ModInt& b);
  friend ModInt operator-(const ModInt& a);
  friend bool operator==(const ModInt& a, const ModInt& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  friend bool operator!=(const ModInt& a, const ModInt& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const ModInt& a) { return os << a.value_; }

  bool is_unit() const;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

}  // namespace qcalc
