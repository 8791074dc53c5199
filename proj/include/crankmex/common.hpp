#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace crankmex {

/// Coefficient type for all truncated series: exact signed integers of
/// arbitrary size. Series coefficients outgrow 64 bits long before the
/// counting tables do, so the series layer is arbitrary-precision
/// throughout while plain counts stay machine-width with overflow checks.
using Coeff = boost::multiprecision::cpp_int;

using Count = long long;

inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("count overflow in addition");
    return r;
}

inline Count checked_sub(Count a, Count b) {
    Count r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("count overflow in subtraction");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("count overflow in multiplication");
    return r;
}

} // namespace crankmex
