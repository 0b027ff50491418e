#pragma once

#include <concepts>
#include <string>

namespace rectcut {

/// Exact field element: Rational, QuadExt and RatFunc all model this.
template <class K>
concept FieldElement = std::regular<K> && std::constructible_from<K, int> &&
                       requires(const K& a, const K& b, K& m) {
                         { a + b } -> std::same_as<K>;
                         { a - b } -> std::same_as<K>;
                         { a * b } -> std::same_as<K>;
                         { a / b } -> std::same_as<K>;
                         { -a } -> std::same_as<K>;
                         { m += a } -> std::same_as<K&>;
                         { m -= a } -> std::same_as<K&>;
                         { a.is_zero() } -> std::convertible_to<bool>;
                         { a.inverse() } -> std::same_as<K>;
                         { a.to_string() } -> std::convertible_to<std::string>;
                       };

/// Field with a real embedding, so signs and decimal approximations exist.
template <class K>
concept OrderedField = FieldElement<K> && std::totally_ordered<K> && requires(const K& a) {
  { a.sign() } -> std::convertible_to<int>;
  { a.to_double() } -> std::convertible_to<double>;
};

/// Whether x lies in the prime field Q.
template <class K>
bool is_rational_value(const K& x) {
  if constexpr (requires { x.is_rational(); }) {
    return x.is_rational();
  } else {
    return true;
  }
}

}  // namespace rectcut
