#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "rectcut/rational.hpp"

namespace rectcut {

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// The radicand is carried by every element. A radicand of 0 marks an
/// element that was built from a rational and has not met a radicand yet;
/// it adopts the radicand of whatever it is combined with. Combining two
/// elements with different nonzero radicands throws ArithmeticError.
class QuadExt {
 public:
  QuadExt() = default;

  template <std::integral I>
  QuadExt(I value) : a_(value) {}  // NOLINT(google-explicit-constructor)

  QuadExt(Rational a);  // NOLINT(google-explicit-constructor)

  /// Throws ArithmeticError unless d is a squarefree integer > 1.
  QuadExt(Rational a, Rational b, std::int64_t d);

  /// sqrt(d) itself.
  static QuadExt sqrt(std::int64_t d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// Sign under the real embedding with sqrt(d) > 0.
  int sign() const;

  QuadExt conjugate() const;
  QuadExt inverse() const;
  /// a^2 - d b^2
  Rational norm() const;
  double to_double() const;
  std::string to_string() const;

  /// Same value with the radicand fixed to d (d = 0 keeps it unbound).
  QuadExt with_radicand(std::int64_t d) const;

  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }
  QuadExt operator-() const;

  friend bool operator==(const QuadExt& lhs, const QuadExt& rhs);
  friend std::strong_ordering operator<=>(const QuadExt& lhs, const QuadExt& rhs);

 private:
  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

bool is_squarefree(std::int64_t n);

/// Radicand shared by two elements; throws ArithmeticError on a mismatch.
std::int64_t join_radicands(std::int64_t d1, std::int64_t d2);

}  // namespace rectcut
