#include "rectcut/quad_ext.hpp"

#include <cmath>
#include <ostream>

#include "rectcut/errors.hpp"
#include "rectcut/scalar_io.hpp"

namespace rectcut {

bool is_squarefree(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

std::int64_t join_radicands(std::int64_t d1, std::int64_t d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw ArithmeticError("mixed radicands sqrt(" + std::to_string(d1) + ") and sqrt(" +
                        std::to_string(d2) + ")");
}

QuadExt::QuadExt(Rational a) : a_(std::move(a)) {}

QuadExt::QuadExt(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 0 && b_.is_zero()) return;
  if (d_ <= 1 || !is_squarefree(d_)) {
    throw ArithmeticError("radicand must be a squarefree integer > 1, got " + std::to_string(d_));
  }
}

QuadExt QuadExt::sqrt(std::int64_t d) { return QuadExt(0, 1, d); }

QuadExt QuadExt::with_radicand(std::int64_t d) const {
  QuadExt out = *this;
  out.d_ = join_radicands(d_, d);
  return out;
}

int QuadExt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;
}

QuadExt QuadExt::conjugate() const {
  QuadExt out = *this;
  out.b_ = -b_;
  return out;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  const Rational n = norm();
  QuadExt out = *this;
  out.a_ = a_ / n;
  out.b_ = -b_ / n;
  return out;
}

double QuadExt::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadExt::to_string() const { return format_scalar(*this); }

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  d_ = join_radicands(d_, rhs.d_);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  d_ = join_radicands(d_, rhs.d_);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  d_ = join_radicands(d_, rhs.d_);
  Rational a = a_ * rhs.a_;
  if (!b_.is_zero() && !rhs.b_.is_zero()) a += b_ * rhs.b_ * Rational(d_);
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  return *this *= rhs.inverse();
}

QuadExt QuadExt::operator-() const {
  QuadExt out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
  join_radicands(lhs.d_, rhs.d_);
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

std::strong_ordering operator<=>(const QuadExt& lhs, const QuadExt& rhs) {
  const int s = (lhs - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

}  // namespace rectcut
