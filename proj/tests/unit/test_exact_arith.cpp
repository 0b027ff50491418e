#include "doctest.h"

#include "generators.hpp"
#include "rectcut/poly.hpp"
#include "rectcut/quad_ext.hpp"
#include "rectcut/rat_func.hpp"
#include "rectcut/scalar_io.hpp"

using namespace rectcut;
using rectcut::testing::Gen;

namespace {

RatPoly rp(std::vector<Rational> c) { return RatPoly(std::move(c)); }

template <class K>
void check_field_axioms(const K& x, const K& y, const K& z) {
  CHECK(x + y == y + x);
  CHECK(x * y == y * x);
  CHECK((x + y) + z == x + (y + z));
  CHECK((x * y) * z == x * (y * z));
  CHECK(x * (y + z) == x * y + x * z);
  CHECK(x - x == K(0));
  CHECK(x + (-x) == K(0));
  if (!x.is_zero()) {
    CHECK(x * x.inverse() == K(1));
    CHECK((y / x) * x == y);
  }
}

}  // namespace

TEST_CASE("rational canonical arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
  CHECK(Rational(BigInt(4), BigInt(-6)).to_string() == "-2/3");
  CHECK(Rational(BigInt(0), BigInt(-6)).denominator() == 1);
  CHECK(Rational(7).to_string() == "7");
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
  CHECK_THROWS_AS(Rational(0).inverse(), ArithmeticError);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), ArithmeticError);
}

TEST_CASE("quadratic extension arithmetic") {
  const QuadExt one_plus = QuadExt(1, 1, 2);
  const QuadExt one_minus = QuadExt(1, -1, 2);
  CHECK(one_plus * one_minus == QuadExt(-1));
  CHECK(one_plus.conjugate() == one_minus);
  CHECK(QuadExt(5).conjugate() == QuadExt(5));
  // (1+sqrt2)^2 = 3 + 2 sqrt2
  const QuadExt sq = one_plus * one_plus;
  CHECK(sq == QuadExt(3, 2, 2));
  CHECK(sq.conjugate() == one_minus * one_minus);
  CHECK(sq.conjugate() == QuadExt(3, -2, 2));

  CHECK(one_minus.sign() < 0);
  CHECK(one_plus.sign() > 0);
  CHECK(QuadExt(Rational(3, 2), Rational(-1, 2), 3).sign() > 0);
  CHECK(QuadExt(-2, 1, 3).sign() < 0);
  CHECK(QuadExt(-1, 1, 3).sign() > 0);

  CHECK_THROWS_AS(QuadExt::sqrt(2) + QuadExt::sqrt(3), ArithmeticError);
  CHECK_THROWS_AS(QuadExt(0, 1, 4), ArithmeticError);
  CHECK_THROWS_AS(QuadExt(0, 1, 1), ArithmeticError);
  CHECK_THROWS_AS(QuadExt(0) / QuadExt(0), ArithmeticError);
  // A rational element adopts the radicand it meets.
  CHECK((QuadExt(2) + QuadExt::sqrt(3)).d() == 3);
}

TEST_CASE("rational function arithmetic") {
  const RatFunc t = RatFunc::t();
  const RatFunc sum = t / (t + RatFunc(1)) + RatFunc(1) / (t + RatFunc(1));
  CHECK(sum == RatFunc(1));
  CHECK(sum.to_string() == "1");
  const RatFunc par = (RatFunc(1) * t) / (RatFunc(1) + t);
  CHECK(par.to_string() == "t/(t + 1)");
  CHECK(par.den().leading() == Rational(1));
  // den monic and coprime: (2t^2 - 2)/(4t - 4) = (1/2)(t + 1)
  const RatFunc f(rp({-2, 0, 2}), rp({-4, 4}));
  CHECK(f.den() == rp({1}));
  CHECK(f.num() == rp({Rational(1, 2), Rational(1, 2)}));
  CHECK(f.evaluate(Rational(3)) == Rational(2));
  CHECK_THROWS_AS(RatFunc(rp({1}), RatPoly()), ArithmeticError);
  CHECK_THROWS_AS(t.evaluate(Rational(0)).inverse(), ArithmeticError);
  CHECK_THROWS_AS((RatFunc(1) / t).evaluate(Rational(0)), ArithmeticError);
}

TEST_CASE("field axioms hold on random elements") {
  Gen gen(20240601);
  for (int i = 0; i < 60; ++i) {
    check_field_axioms(gen.rational(), gen.rational(), gen.rational());
    check_field_axioms(gen.quad(3), gen.quad(3), gen.quad(3));
    check_field_axioms(gen.quad(2), gen.quad(2), gen.quad(2));
  }
  for (int i = 0; i < 25; ++i) check_field_axioms(gen.ratfunc(), gen.ratfunc(), gen.ratfunc());
}

TEST_CASE("canonicalization is idempotent") {
  Gen gen(7);
  for (int i = 0; i < 40; ++i) {
    const RatFunc f = gen.ratfunc(3);
    const RatFunc again(f.num(), f.den());
    CHECK(again == f);
    const Rational r = gen.rational();
    CHECK(Rational(r.numerator(), r.denominator()) == r);
    CHECK(Rational(r.numerator(), r.denominator()).to_string() == r.to_string());
  }
}

TEST_CASE("conjugation is a field automorphism") {
  Gen gen(99);
  for (int i = 0; i < 100; ++i) {
    const QuadExt x = gen.quad(5);
    const QuadExt y = gen.quad(5);
    CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    CHECK(x.conjugate().conjugate() == x);
    if (!y.is_zero()) CHECK((x / y).conjugate() == x.conjugate() / y.conjugate());
  }
}

TEST_CASE("polynomial long division") {
  const RatPoly d = rp({-1, -2, 1});  // x^2 - 2x - 1
  const auto cube = divmod(RatPoly::monomial(1, 3), d);
  CHECK(cube.quotient == rp({2, 1}));
  CHECK(cube.remainder == rp({2, 5}));

  const auto self = divmod(d, d);
  CHECK(self.quotient == rp({1}));
  CHECK(self.remainder.is_zero());

  const RatPoly small = rp({3, 4});
  const auto low = divmod(small, d);
  CHECK(low.quotient.is_zero());
  CHECK(low.remainder == small);

  CHECK_THROWS_AS(divmod(d, RatPoly()), ArithmeticError);

  Gen gen(3);
  for (int i = 0; i < 80; ++i) {
    const RatPoly p = gen.poly(7);
    RatPoly q;
    do {
      q = gen.poly(4);
    } while (q.is_zero());
    const auto [quot, rem] = divmod(p, q);
    CHECK(quot * q + rem == p);
    CHECK(rem.degree() < q.degree());
  }
}

TEST_CASE("polynomial evaluation") {
  const RatPoly d = rp({-1, -2, 1});
  CHECK(eval(d, QuadExt(1, 1, 2)).is_zero());
  CHECK(eval(d, QuadExt(1, -1, 2)).is_zero());
  CHECK(eval(rp({7, 3, 5}), Rational(0)) == Rational(7));
  CHECK(eval(rp({7, 3, 5}), QuadExt(0)) == QuadExt(7));

  Gen gen(11);
  for (int i = 0; i < 50; ++i) {
    const RatPoly p = gen.poly(5);
    const RatPoly q = gen.poly(5);
    const QuadExt x = gen.quad(7);
    CHECK(eval(p + q, x) == eval(p, x) + eval(q, x));
    CHECK(eval(p * q, x) == eval(p, x) * eval(q, x));
    const Rational r = gen.rational();
    CHECK(eval(p * q, r) == eval(p, r) * eval(q, r));
  }
}

TEST_CASE("polynomial gcd and squarefree check") {
  CHECK(gcd(rp({-1, 0, 1}), rp({-1, 1})) == rp({-1, 1}));
  CHECK(is_squarefree(rp({-1, -2, 1})));
  CHECK_FALSE(is_squarefree(rp({1, -2, 1})));
  CHECK(gcd(rp({0, 2}), RatPoly()) == rp({0, 1}));
  CHECK_THROWS_AS(gcd(RatPoly(), RatPoly()), ArithmeticError);
}

TEST_CASE("scalar text syntax") {
  CHECK(parse_rational("  -3 / 4 ") == Rational(-3, 4));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_quad("3/2 + 1/2*sqrt(3)") == QuadExt(Rational(3, 2), Rational(1, 2), 3));
  CHECK(parse_quad("sqrt(2)") == QuadExt::sqrt(2));
  CHECK(parse_quad("1 - sqrt(2)") == QuadExt(1, -1, 2));
  CHECK(parse_quad("-sqrt(2)+1") == QuadExt(1, -1, 2));
  CHECK(parse_quad("7/5", 3).d() == 3);
  CHECK(format_scalar(QuadExt(Rational(3, 2), Rational(1, 2), 3)) == "3/2 + 1/2*sqrt(3)");
  CHECK(format_scalar(QuadExt(1, -1, 2)) == "1 - sqrt(2)");
  CHECK(format_scalar(QuadExt(0, -2, 2)) == "-2*sqrt(2)");
  CHECK(parse_ratfunc("t") == RatFunc::t());
  CHECK(parse_ratfunc("2 + 1/2*t") == RatFunc(rp({2, Rational(1, 2)})));

  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("sqrt(2)"), ParseError);
  CHECK_THROWS_AS(parse_rational("1 2"), ParseError);
  CHECK_THROWS_AS(parse_quad("sqrt(8)"), ParseError);
  CHECK_THROWS_AS(parse_quad("sqrt(2)", 3), ParseError);
  CHECK_THROWS_AS(parse_quad("sqrt(2) + sqrt(3)"), ParseError);
  CHECK_THROWS_AS(parse_quad("t"), ParseError);

  Gen gen(5);
  for (int i = 0; i < 200; ++i) {
    const Rational r = gen.rational(1000);
    CHECK(parse_rational(format_scalar(r)) == r);
    const QuadExt q = gen.quad(6, 1000);
    CHECK(parse_quad(format_scalar(q), 6) == q);
  }
}
