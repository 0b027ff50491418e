#include "rectcut/scalar_io.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "rectcut/errors.hpp"

namespace rectcut {
namespace {

// One additive term: coeff * unit, where unit is 1, sqrt(d) or t.
struct Term {
  enum class Unit { one, sqrt, t };
  Rational coeff;
  Unit unit = Unit::one;
  std::int64_t radicand = 0;
};

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty scalar");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term term = parse_term();
      if (negative) term.coeff = -term.coeff;
      terms.push_back(std::move(term));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return terms;
  }

 private:
  Term parse_term() {
    skip_ws();
    Term term;
    if (starts_with("sqrt") || starts_with("t")) {
      term.coeff = Rational(1);
      parse_unit(term);
      return term;
    }
    term.coeff = parse_number();
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      parse_unit(term);
    }
    return term;
  }

  void parse_unit(Term& term) {
    if (starts_with("sqrt")) {
      pos_ += 4;
      skip_ws();
      expect('(');
      const BigInt d = parse_integer();
      skip_ws();
      expect(')');
      if (d > BigInt(std::numeric_limits<std::int64_t>::max())) fail("radicand too large");
      const auto radicand = static_cast<std::int64_t>(d);
      if (radicand <= 1 || !is_squarefree(radicand)) fail("radicand must be a squarefree integer > 1");
      term.unit = Term::Unit::sqrt;
      term.radicand = radicand;
      return;
    }
    if (starts_with("t")) {
      ++pos_;
      term.unit = Term::Unit::t;
      return;
    }
    fail("expected sqrt(d) or t");
  }

  Rational parse_number() {
    const BigInt num = parse_integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      const BigInt den = parse_integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  BigInt parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_with(std::string_view word) const { return text_.substr(pos_, word.size()) == word; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse scalar \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " +
                     why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Term> parse_terms(std::string_view text) { return TermParser(text).parse(); }

}  // namespace

Rational parse_rational(std::string_view text) {
  Rational out;
  for (const Term& term : parse_terms(text)) {
    if (term.unit != Term::Unit::one) throw ParseError("expected a rational, got \"" + std::string(text) + "\"");
    out += term.coeff;
  }
  return out;
}

QuadExt parse_quad(std::string_view text, std::int64_t expected_d) {
  Rational a;
  Rational b;
  std::int64_t d = expected_d;
  for (const Term& term : parse_terms(text)) {
    switch (term.unit) {
      case Term::Unit::one:
        a += term.coeff;
        break;
      case Term::Unit::sqrt:
        if (d != 0 && d != term.radicand) {
          throw ParseError("radicand sqrt(" + std::to_string(term.radicand) + ") does not match field sqrt(" +
                           std::to_string(d) + ")");
        }
        d = term.radicand;
        b += term.coeff;
        break;
      case Term::Unit::t:
        throw ParseError("indeterminate t is not allowed here: \"" + std::string(text) + "\"");
    }
  }
  if (d == 0) return QuadExt(a);
  return QuadExt(a, b, d);
}

RatFunc parse_ratfunc(std::string_view text) {
  Rational c0;
  Rational c1;
  for (const Term& term : parse_terms(text)) {
    switch (term.unit) {
      case Term::Unit::one:
        c0 += term.coeff;
        break;
      case Term::Unit::t:
        c1 += term.coeff;
        break;
      case Term::Unit::sqrt:
        throw ParseError("sqrt is not allowed in symbolic values: \"" + std::string(text) + "\"");
    }
  }
  return RatFunc(RatPoly({c0, c1}));
}

std::optional<std::int64_t> find_radicand(std::string_view text) {
  const auto at = text.find("sqrt");
  if (at == std::string_view::npos) return std::nullopt;
  const auto open = text.find('(', at);
  const auto close = text.find(')', at);
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw ParseError("malformed sqrt in \"" + std::string(text) + "\"");
  }
  const std::string digits(text.substr(open + 1, close - open - 1));
  try {
    return std::stoll(digits);
  } catch (const std::exception&) {
    throw ParseError("malformed sqrt in \"" + std::string(text) + "\"");
  }
}

std::string format_scalar(const Rational& x) { return x.to_string(); }

std::string format_scalar(const QuadExt& x) {
  if (x.b().is_zero()) return x.a().to_string();
  const std::string root = "sqrt(" + std::to_string(x.d()) + ")";
  const Rational mag = x.b().abs();
  const std::string b_part = mag == Rational(1) ? root : mag.to_string() + "*" + root;
  if (x.a().is_zero()) return x.b().sign() < 0 ? "-" + b_part : b_part;
  return x.a().to_string() + (x.b().sign() < 0 ? " - " : " + ") + b_part;
}

std::string format_scalar(const RatFunc& x) { return x.to_string(); }

}  // namespace rectcut
