#include "rectcut/rat_func.hpp"

#include <ostream>

namespace rectcut {

RatFunc::RatFunc(const Rational& value) : num_(RatPoly::constant(value)), den_(RatPoly::constant(1)) {}

RatFunc::RatFunc(RatPoly num) : num_(std::move(num)), den_(RatPoly::constant(1)) {}

RatFunc::RatFunc(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

RatFunc RatFunc::t() { return RatFunc(RatPoly::x()); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = RatPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    const RatPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).quotient;
      den_ = divmod(den_, g).quotient;
    }
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    const Rational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return RatFunc(den_, num_);
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return rectcut::to_string(num_, "t");
  const std::string n = rectcut::to_string(num_, "t");
  const std::string d = rectcut::to_string(den_, "t");
  const bool bare_den = den_.coeffs().size() == 2 && den_.coeffs()[0].is_zero() && den_.leading() == Rational(1);
  return (n.find(' ') == std::string::npos ? n : "(" + n + ")") + "/" + (bare_den ? d : "(" + d + ")");
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  return *this *= rhs.inverse();
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -num_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace rectcut
