#include "qcalc/scalars.hpp"

#include <cctype>
#include <numeric>
#include <vector>

#include "qcalc/errors.hpp"

namespace qcalc {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return rational_from_decimal(text);
  Rational num = rational_from_decimal(text.substr(0, slash));
  Rational den = rational_from_decimal(text.substr(slash + 1));
  if (!num.is_integer() || !den.is_integer() || den.is_zero())
    throw ParseError("malformed ratio '" + std::string(text) + "'");
  return num / den;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero("zero raised to a negative power");
    return inverse().pow(-exponent);
  }
  // GMP exponent arguments are unsigned long; square-and-multiply keeps this
  // independent of that width.
  Rational result(1);
  Rational base = *this;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::approx(int digits) const {
  mpf_class f(value_, 256);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  return std::string(buf.data());
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational rational_from_decimal(std::string_view text) {
  auto fail = [&]() -> ParseError {
    return ParseError("malformed decimal literal '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  std::size_t int_digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits.push_back(text[pos++]);
    ++int_digits;
  }
  std::size_t frac_digits = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos++]);
      ++frac_digits;
    }
    if (frac_digits == 0) throw fail();
  }
  if (int_digits == 0) throw fail();
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (pos - start > 6) throw fail();
      exponent = exponent * 10 + (text[pos++] - '0');
    }
    if (pos == start) throw fail();
    if (exp_negative) exponent = -exponent;
  }
  if (pos != text.size()) throw fail();

  BigInt num(digits, 10);
  if (negative) num = -num;
  long scale = exponent - static_cast<long>(frac_digits);
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale >= 0) return Rational(num * ten_pow, BigInt(1));
  return Rational(num, ten_pow);
}

ModInt::ModInt(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw InvalidArgument("ModInt modulus must be at least 2");
  value_ = ((value % modulus) + modulus) % modulus;
}

namespace {
void require_same_ring(const ModInt& a, const ModInt& b) {
  if (a.modulus() != b.modulus()) throw MismatchError("ModInt operands from different rings");
}
}  // namespace

ModInt operator+(const ModInt& a, const ModInt& b) {
  require_same_ring(a, b);
  return {a.value_ + b.value_, a.modulus_};
}

ModInt operator-(const ModInt& a, const ModInt& b) {
  require_same_ring(a, b);
  return {a.value_ - b.value_, a.modulus_};
}

ModInt operator*(const ModInt& a, const ModInt& b) {
  require_same_ring(a, b);
  return {static_cast<std::int64_t>((static_cast<__int128>(a.value_) * b.value_) % a.modulus_),
          a.modulus_};
}

ModInt operator-(const ModInt& a) { return {-a.value_, a.modulus_}; }

bool ModInt::is_unit() const { return std::gcd(value_, modulus_) == 1; }

}  // namespace qcalc
