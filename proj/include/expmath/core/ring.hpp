#pragma once

#include <concepts>

#include "expmath/core/rational.hpp"

namespace expmath {

// Minimal commutative-ring interface shared by every coefficient type.
template <class R>
concept Ring = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  R(0);
  R(1);
};

template <class R>
struct is_field : std::false_type {};
template <>
struct is_field<Rational> : std::true_type {};
template <class R>
inline constexpr bool is_field_v = is_field<R>::value;

}  // namespace expmath
