#pragma once

#include <string>
#include <vector>

#include "crankmex/series.hpp"

namespace crankmex {

/// Bivariate series, Laurent in z and truncated in q: coefficients of
/// z^m q^n with |m| <= N and 0 <= n <= N. This is the shape of the
/// crank generating function, whose z-exponents never exceed the
/// q-exponent, so the symmetric z window at the q truncation order
/// loses nothing for the products built here.
class ZSeries {
public:
    explicit ZSeries(int order);

    static ZSeries one(int order) { return monomial(order, 0, 0, 1); }
    static ZSeries monomial(int order, int z_exp, int q_exp, Coeff c = 1);

    int order() const noexcept { return order_; }

    const Coeff& coeff(int z_exp, int q_exp) const;
    void set_coeff(int z_exp, int q_exp, Coeff value);
    void add_coeff(int z_exp, int q_exp, const Coeff& value);

    ZSeries& operator+=(const ZSeries& rhs);
    ZSeries& operator*=(const ZSeries& rhs);
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b);

    /// Multiply by a univariate series treated as z^0.
    ZSeries& mul_univariate(const Series& s);

    /// Substitute z = +1 or z = -1, collapsing to a series in q.
    Series collapse_z(int z_sign) const;

    /// True when the coefficient of z^m q^n equals that of z^-m q^n
    /// for every m, n.
    bool z_symmetric() const;

    bool operator==(const ZSeries&) const = default;

    /// JSON list of {"z": m, "q": n, "c": "coeff"} triples with nonzero
    /// coefficient, sorted by (n, m).
    std::string to_json() const;

private:
    std::size_t idx(int m, int n) const {
        return static_cast<std::size_t>(m + order_) * (static_cast<std::size_t>(order_) + 1) +
               static_cast<std::size_t>(n);
    }
    void require_same_order(const ZSeries& rhs) const;

    int order_;
    std::vector<Coeff> c_;
};

} // namespace crankmex
