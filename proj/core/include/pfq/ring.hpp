#pragma once

#include <concepts>

#include "pfq/qseries.hpp"
#include "pfq/rational.hpp"

namespace pfq {

// Exact commutative ring scalar. zero_like/one_like take a prototype so that
// series scalars can carry their truncation order.
template <class S>
concept RingScalar = std::regular<S> && requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<S>;
  { one_like(a) } -> std::convertible_to<S>;
  { inverse(a) } -> std::convertible_to<S>;
  { pow(a, 2L) } -> std::convertible_to<S>;
};

// Every nonzero element is invertible.
template <class S>
inline constexpr bool is_field_v = false;
template <>
inline constexpr bool is_field_v<Rational> = true;

static_assert(RingScalar<Rational>);
static_assert(RingScalar<QSeries>);

}  // namespace pfq
