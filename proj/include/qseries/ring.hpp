#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "qseries/dual.hpp"
#include "qseries/rational.hpp"
#include "qseries/zlaurent.hpp"

namespace qseries {

/// The small interface a coefficient ring must provide: R{} is zero, R{1} is
/// one, plus exact +, -, *, negation, equality and invert-if-unit.
template <class R>
concept CoefRing = std::regular<R> && std::constructible_from<R, long> &&
                   requires(const R& a, const R& b) {
                     { a + b } -> std::convertible_to<R>;
                     { a - b } -> std::convertible_to<R>;
                     { a * b } -> std::convertible_to<R>;
                     { -a } -> std::convertible_to<R>;
                     { is_zero(a) } -> std::convertible_to<bool>;
                     { try_invert(a) } -> std::same_as<std::optional<R>>;
                     { to_string(a) } -> std::convertible_to<std::string>;
                   };

static_assert(CoefRing<Rational>);
static_assert(CoefRing<DualRational>);
static_assert(CoefRing<ZLaurentQ>);
static_assert(CoefRing<ZLaurentD>);

}  // namespace qseries
