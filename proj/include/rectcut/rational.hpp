#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rectcut {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const;
  bool is_integer() const;
  int sign() const;

  Rational inverse() const;
  Rational abs() const;
  double to_double() const;
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  std::size_t hash() const;

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value value) : value_(std::move(value)) {}

  Value value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace rectcut
