#include "rectcut/algcheck.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "rectcut/errors.hpp"

namespace rectcut {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) return;
  BigInt content = 0;
  for (const BigInt& c : coeffs_) content = gcd(content, c);
  if (coeffs_.back() < 0) content = -content;
  for (BigInt& c : coeffs_) c /= content;
}

IntPoly IntPoly::from_rational(const RatPoly& p) {
  BigInt den = 1;
  for (const Rational& c : p.coeffs()) den = lcm(den, c.denominator());
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) out.push_back(c.numerator() * (den / c.denominator()));
  return IntPoly(std::move(out));
}

RatPoly IntPoly::to_rational() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const BigInt& c : coeffs_) out.emplace_back(c);
  return RatPoly(std::move(out));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    std::string mono;
    if (k == 0 || mag != 1) mono = mag.str();
    if (k >= 1) mono += var;
    if (k >= 2) mono += "^" + std::to_string(k);
    if (out.empty()) {
      out = negative ? "-" + mono : mono;
    } else {
      out += negative ? " - " : " + ";
      out += mono;
    }
  }
  return out;
}

IntPoly parse_int_poly(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty polynomial");
  std::map<std::size_t, BigInt> terms;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad polynomial \"" + std::string(text) + "\": " + why);
  };
  auto digits = [&]() {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    const std::string coeff = digits();
    bool has_x = false;
    if (i < s.size() && s[i] == '*') {
      if (coeff.empty()) fail("'*' without a coefficient");
      ++i;
      if (i >= s.size() || s[i] != 'x') fail("expected x after '*'");
    }
    std::size_t power = 0;
    if (i < s.size() && s[i] == 'x') {
      has_x = true;
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const std::string p = digits();
        if (p.empty() || p.size() > 4) fail("bad exponent");
        power = static_cast<std::size_t>(std::stoul(p));
      }
    }
    if (coeff.empty() && !has_x) fail("empty term");
    BigInt c = coeff.empty() ? BigInt(1) : BigInt(coeff);
    terms[power] += sign * c;
  }
  std::vector<BigInt> coeffs(terms.rbegin()->first + 1, BigInt(0));
  for (const auto& [k, c] : terms) coeffs[k] = c;
  return IntPoly(std::move(coeffs));
}

IntPoly minpoly_quadratic(const QuadExt& x) {
  if (x.is_rational()) return IntPoly::from_rational(RatPoly({-x.a(), Rational(1)}));
  // (X - a)^2 - b^2 d
  const Rational a = x.a();
  const Rational b = x.b();
  return IntPoly::from_rational(RatPoly({a * a - b * b * Rational(x.d()), Rational(-2) * a, Rational(1)}));
}

ConjugateReport conjugate_lemma_check(const IntPoly& p, const QuadExt& x) {
  ConjugateReport r;
  const RatPoly P = p.to_rational();
  const QuadExt xc = x.conjugate();
  r.at_x = eval(P, x);
  r.at_conj = eval(P, xc);
  r.conjugates = r.at_conj == r.at_x.conjugate();
  r.root_transfer = !r.at_x.is_zero() || r.at_conj.is_zero();
  r.remainder = divmod(P, minpoly_quadratic(x).to_rational()).remainder;
  r.remainder_agrees = eval(r.remainder, x) == r.at_x && eval(r.remainder, xc) == r.at_conj;
  return r;
}

namespace {

void check_domain(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no root set to test");
  if (p.degree() < 1) throw DomainError("constant polynomial has no roots");
  if (!is_squarefree(p.to_rational())) throw DomainError("polynomial has repeated roots: " + p.to_string());
}

}  // namespace

std::vector<Rational> routh_first_column(const IntPoly& p) {
  check_domain(p);
  const std::size_t n = static_cast<std::size_t>(p.degree());
  // q(x) = +-p(-x), descending coefficients with positive leading term.
  std::vector<Rational> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational c(p.coeffs()[k]);
    if (k % 2 == 1) c = -c;
    q[n - k] = c;
  }
  if (q[0].sign() < 0) {
    for (Rational& c : q) c = -c;
  }
  const std::size_t width = n / 2 + 1;
  std::vector<std::vector<Rational>> rows(2, std::vector<Rational>(width + 1, Rational(0)));
  for (std::size_t k = 0; k <= n; ++k) rows[k % 2][k / 2] = q[k];
  std::vector<Rational> column{rows[0][0], rows[1][0]};
  for (std::size_t i = 2; i <= n; ++i) {
    const auto& up = rows[i - 2];
    const auto& mid = rows[i - 1];
    if (mid[0].is_zero()) break;
    std::vector<Rational> next(width + 1, Rational(0));
    for (std::size_t j = 0; j < width; ++j) next[j] = (mid[0] * up[j + 1] - up[0] * mid[j + 1]) / mid[0];
    column.push_back(next[0]);
    rows.push_back(std::move(next));
  }
  if (n == 0) column.resize(1);
  return column;
}

bool positive_real_part_all_roots(const IntPoly& p) {
  const std::vector<Rational> column = routh_first_column(p);
  if (column.size() != static_cast<std::size_t>(p.degree()) + 1) return false;
  return std::all_of(column.begin(), column.end(), [](const Rational& c) { return c.sign() > 0; });
}

namespace {

constexpr long long kDivisorSearchLimit = 1000000000000LL;

std::optional<std::vector<BigInt>> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n > kDivisorSearchLimit) return std::nullopt;
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  std::vector<Rational> roots;
  std::vector<BigInt> c = p.coeffs();
  if (!c.empty() && c.front() == 0) {
    roots.emplace_back(0);
    while (!c.empty() && c.front() == 0) c.erase(c.begin());
  }
  if (c.size() <= 1) return roots;
  const auto num = positive_divisors(c.front());
  const auto den = positive_divisors(c.back());
  if (!num || !den) return std::nullopt;
  const RatPoly P = p.to_rational();
  for (const BigInt& a : *num) {
    for (const BigInt& b : *den) {
      for (int sign : {1, -1}) {
        const Rational r(BigInt(sign * a), b);
        if (eval(P, r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Cond3Verdict lfs_condition3(const QuadExt& x) {
  Cond3Verdict v;
  v.poly = minpoly_quadratic(x);
  v.pass = positive_real_part_all_roots(v.poly);
  v.conclusive = true;
  return v;
}

Cond3Verdict lfs_condition3(const IntPoly& p) {
  Cond3Verdict v;
  v.poly = p;
  v.pass = positive_real_part_all_roots(p);
  if (v.pass) {
    v.conclusive = true;
    return v;
  }
  if (p.degree() == 1) {
    v.conclusive = true;
  } else if (p.degree() <= 3) {
    const auto roots = rational_roots(p);
    if (!roots) {
      v.caveat = "coefficients too large for the rational-root search; irreducibility unknown";
    } else if (roots->empty()) {
      v.conclusive = true;
    } else {
      std::string list;
      for (const Rational& r : *roots) list += (list.empty() ? "" : ", ") + r.to_string();
      v.caveat = "polynomial is reducible (rational roots " + list + "); FAIL holds for some root, not necessarily all";
    }
  } else {
    v.caveat = "irreducibility is not checked above degree 3; FAIL holds for some root, not necessarily all";
  }
  return v;
}

}  // namespace rectcut
