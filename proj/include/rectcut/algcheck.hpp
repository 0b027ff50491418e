#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rectcut/poly.hpp"
#include "rectcut/quad_ext.hpp"
#include "rectcut/rat_func.hpp"
#include "rectcut/rational.hpp"

namespace rectcut {

/// Integer polynomial, lowest degree first. Stored primitive (content 1)
/// with a positive leading coefficient, so equal root sets compare equal.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  /// Clears denominators of a rational polynomial.
  static IntPoly from_rational(const RatPoly& p);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  RatPoly to_rational() const;

  /// "2x^2 - 6x + 3"
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Reads "2x^2-6x+3": integer coefficients, optional '*', implicit 1,
/// caret powers. Throws ParseError.
IntPoly parse_int_poly(std::string_view text);

/// Minimal polynomial over Q: qx - p for x = p/q, otherwise the primitive
/// quadratic with roots a +- b*sqrt(d).
IntPoly minpoly_quadratic(const QuadExt& x);

template <class X>
X eval(const IntPoly& p, const X& x) {
  return eval(p.to_rational(), x);
}

struct ConjugateReport {
  QuadExt at_x;     // P(x) = m + n*sqrt(d)
  QuadExt at_conj;  // P(conj x)
  bool conjugates = false;     // at_conj == m - n*sqrt(d)
  bool root_transfer = false;  // P(x) = 0 implies P(conj x) = 0
  // Second mechanism: P = Q * minpoly(x) + (u*X + v); P(x) = u*x + v.
  RatPoly remainder;
  bool remainder_agrees = false;
};

ConjugateReport conjugate_lemma_check(const IntPoly& p, const QuadExt& x);

/// True iff every complex root of p has positive real part. Exact
/// Routh-Hurwitz on +-p(-x); any nonpositive first-column entry gives false.
/// Throws DomainError on the zero polynomial, constants, or repeated roots.
bool positive_real_part_all_roots(const IntPoly& p);

/// First column of the Routh array for +-p(-x), for diagnostics.
std::vector<Rational> routh_first_column(const IntPoly& p);

/// Rational roots of p when the divisor search is feasible, else nullopt.
std::optional<std::vector<Rational>> rational_roots(const IntPoly& p);

struct Cond3Verdict {
  bool pass = false;
  /// PASS is always conclusive. FAIL is conclusive only when the polynomial
  /// is known irreducible (degree 1, a minimal polynomial, or degree <= 3
  /// without rational roots).
  bool conclusive = false;
  IntPoly poly;
  std::string caveat;
};

Cond3Verdict lfs_condition3(const QuadExt& x);
Cond3Verdict lfs_condition3(const IntPoly& p);

}  // namespace rectcut
