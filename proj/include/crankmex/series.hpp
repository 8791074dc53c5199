#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "crankmex/common.hpp"

namespace crankmex {

/// Truncated power series in q with exact integer coefficients.
/// The truncation order N is fixed at construction and coefficients of
/// q^0 .. q^N are kept. Arithmetic between series of different orders
/// throws: silent precision loss is worse than a loud mismatch.
class Series {
public:
    explicit Series(int order);

    static Series one(int order) { return monomial(order, 0, 1); }
    static Series monomial(int order, int exponent, Coeff c = 1);
    static Series make(int order, std::initializer_list<std::pair<int, Coeff>> monomials);

    int order() const noexcept { return order_; }

    const Coeff& coeff(int k) const;
    void set_coeff(int k, Coeff value);
    void add_coeff(int k, const Coeff& value);

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Series& rhs);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    Series operator-() const;

    /// Multiplicative inverse; the constant coefficient must be +1 or -1.
    Series inverse() const;

    /// Copy truncated to a smaller order.
    Series truncated(int new_order) const;

    bool operator==(const Series&) const = default;

    bool is_zero() const;
    std::string pretty() const;

    /// JSON array of decimal coefficient strings, index = q-exponent.
    std::string to_json() const;

private:
    void require_same_order(const Series& rhs) const;

    int order_;
    std::vector<Coeff> c_;
};

} // namespace crankmex
