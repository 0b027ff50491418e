#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rectcut/quad_ext.hpp"
#include "rectcut/rat_func.hpp"
#include "rectcut/rational.hpp"

namespace rectcut {

/// Which exact field a file's scalars live in.
struct FieldDescriptor {
  enum class Kind { rational, quadratic };

  Kind kind = Kind::rational;
  std::int64_t d = 0;

  static FieldDescriptor rational() { return {}; }
  static FieldDescriptor quadratic(std::int64_t d) { return {Kind::quadratic, d}; }

  bool is_quadratic() const { return kind == Kind::quadratic; }

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

// Textual scalar syntax:
//   rational   "p" or "p/q"
//   quadratic  "a/b + c/e*sqrt(d)", either term may be omitted, "sqrt(d)" alone allowed
//   symbolic   "p/q*t", "t", sums thereof (netlist values in symbolic mode)
// Whitespace is insignificant. Printing produces text the parser reads back exactly.

Rational parse_rational(std::string_view text);

/// When expected_d is nonzero, any sqrt(d) in the text must use that radicand.
/// The result carries expected_d as its radicand even if the text is rational.
QuadExt parse_quad(std::string_view text, std::int64_t expected_d = 0);

/// Affine expressions in the indeterminate t with rational coefficients.
RatFunc parse_ratfunc(std::string_view text);

/// Radicand mentioned in the text ("sqrt(d)"), if any.
std::optional<std::int64_t> find_radicand(std::string_view text);

std::string format_scalar(const Rational& x);
std::string format_scalar(const QuadExt& x);
std::string format_scalar(const RatFunc& x);

template <class K>
K parse_scalar(std::string_view text, const FieldDescriptor& field);

template <>
inline Rational parse_scalar<Rational>(std::string_view text, const FieldDescriptor& field) {
  if (field.is_quadratic()) {
    const QuadExt q = parse_quad(text, field.d);
    if (!q.is_rational()) throw ParseError("irrational value in a rational context: " + std::string(text));
    return q.a();
  }
  return parse_rational(text);
}

template <>
inline QuadExt parse_scalar<QuadExt>(std::string_view text, const FieldDescriptor& field) {
  return parse_quad(text, field.is_quadratic() ? field.d : 0);
}

template <>
inline RatFunc parse_scalar<RatFunc>(std::string_view text, const FieldDescriptor&) {
  return parse_ratfunc(text);
}

}  // namespace rectcut
