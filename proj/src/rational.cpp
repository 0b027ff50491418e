#include "rectcut/rational.hpp"

#include <functional>
#include <ostream>

#include "rectcut/errors.hpp"

namespace rectcut {

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw ArithmeticError("rational with zero denominator");
  if (denominator < 0) {
    value_ = Value(BigInt(-numerator), BigInt(-denominator));
  } else {
    value_ = Value(numerator, denominator);
  }
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_zero() const { return value_.is_zero(); }
bool Rational::is_integer() const { return denominator() == 1; }
int Rational::sign() const { return value_.sign(); }

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return Rational(Value(1) / value_);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
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
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(Value(-value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = lhs.value_.compare(rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(to_string());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

}  // namespace rectcut
