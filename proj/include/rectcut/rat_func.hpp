#pragma once

#include <iosfwd>
#include <string>

#include "rectcut/poly.hpp"
#include "rectcut/rational.hpp"

namespace rectcut {

using RatPoly = Poly<Rational>;

/// Element num(t)/den(t) of Q(t), kept in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(RatPoly::constant(1)) {}

  template <std::integral I>
  RatFunc(I value) : RatFunc(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  RatFunc(const Rational& value);  // NOLINT(google-explicit-constructor)
  explicit RatFunc(RatPoly num);
  RatFunc(RatPoly num, RatPoly den);

  /// The indeterminate t.
  static RatFunc t();

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatFunc inverse() const;
  std::string to_string() const;

  /// Value at a point; throws ArithmeticError where the denominator vanishes.
  template <FieldElement X>
  X evaluate(const X& at) const {
    const X d = eval(den_, at);
    if (d.is_zero()) throw ArithmeticError("rational function has a pole at " + at.to_string());
    return eval(num_, at) / d;
  }

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
  friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

 private:
  void normalize();

  RatPoly num_;
  RatPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace rectcut
