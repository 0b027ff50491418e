#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rectcut/errors.hpp"
#include "rectcut/field.hpp"

namespace rectcut {

/// Univariate polynomial over a field, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
template <FieldElement K>
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(K c) { return Poly(std::vector<K>{std::move(c)}); }
  static Poly monomial(K c, std::size_t degree) {
    std::vector<K> coeffs(degree + 1, K(0));
    coeffs[degree] = std::move(c);
    return Poly(std::move(coeffs));
  }
  static Poly x() { return monomial(K(1), 1); }

  const std::vector<K>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const K& leading() const { return coeffs_.back(); }

  K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<K> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * K(static_cast<long long>(i)));
    return Poly(std::move(out));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const K inv = leading().inverse();
    return scaled(inv);
  }

  Poly scaled(const K& s) const {
    std::vector<K> out;
    out.reserve(coeffs_.size());
    for (const K& c : coeffs_) out.push_back(c * s);
    return Poly(std::move(out));
  }

  /// P(x^k)
  Poly compose_power(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<K> out(static_cast<std::size_t>(degree()) * k + 1, K(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
    return Poly(std::move(out));
  }

  Poly& operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  Poly operator-() const { return scaled(K(-1)); }

  friend Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<K> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, K(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

template <FieldElement K>
struct PolyDivision {
  Poly<K> quotient;
  Poly<K> remainder;
};

/// Long division: p = quotient * d + remainder with deg remainder < deg d.
template <FieldElement K>
PolyDivision<K> divmod(const Poly<K>& p, const Poly<K>& d) {
  if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (p.degree() < d.degree()) return {Poly<K>(), p};
  std::vector<K> rem = p.coeffs();
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  std::vector<K> quot(rem.size() - dd, K(0));
  const K lead_inv = d.leading().inverse();
  for (std::size_t k = rem.size(); k-- > dd;) {
    const K q = rem[k] * lead_inv;
    if (q.is_zero()) continue;
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d.coeffs()[j];
  }
  rem.resize(dd);
  return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

/// Monic greatest common divisor by Euclid's algorithm.
template <FieldElement K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  if (a.is_zero() && b.is_zero()) throw ArithmeticError("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly<K> r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// True when gcd(p, p') is a constant. Zero polynomial is not squarefree.
template <FieldElement K>
bool is_squarefree(const Poly<K>& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

/// Horner evaluation of p at x in any field X that embeds K.
template <FieldElement K, FieldElement X>
X eval(const Poly<K>& p, const X& x) {
  X acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + X(*it);
  return acc;
}

/// Human-readable form with the given variable name, e.g. "t^2 + 3/2*t - 1".
template <FieldElement K>
std::string to_string(const Poly<K>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const K& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string mag;
    bool negative = false;
    if constexpr (requires { c.sign(); }) {
      negative = c.sign() < 0;
      mag = (negative ? -c : c).to_string();
    } else {
      mag = c.to_string();
    }
    if (mag.find(' ') != std::string::npos) mag = "(" + mag + ")";
    std::string mono;
    if (k == 0) {
      mono = mag;
    } else {
      const std::string power = k == 1 ? var : var + "^" + std::to_string(k);
      mono = mag == "1" ? power : mag + "*" + power;
    }
    if (out.empty()) {
      out = negative ? "-" + mono : mono;
    } else {
      out += negative ? " - " : " + ";
      out += mono;
    }
  }
  return out;
}

}  // namespace rectcut
