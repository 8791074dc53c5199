#pragma once

#include <vector>

#include "crankmex/series.hpp"

namespace crankmex {

/// Bivariate series in x and y truncated by total degree: coefficients
/// of x^a y^b with a, b >= 0 and a + b <= D are kept. Total degree is
/// the natural filtration for the theta-product identity this type
/// exists to check.
class XYSeries {
public:
    explicit XYSeries(int total_order);

    static XYSeries one(int total_order) { return monomial(total_order, 0, 0, 1); }
    static XYSeries monomial(int total_order, int x_exp, int y_exp, Coeff c = 1);

    int total_order() const noexcept { return total_order_; }

    const Coeff& coeff(int x_exp, int y_exp) const;
    void add_coeff(int x_exp, int y_exp, const Coeff& value);

    XYSeries& operator+=(const XYSeries& rhs);
    XYSeries& operator*=(const XYSeries& rhs);
    friend XYSeries operator*(const XYSeries& a, const XYSeries& b);

    /// Substitute x = q^alpha, y = q^beta (alpha, beta >= 1 so the image
    /// order is controlled by the total order) into a Series of the
    /// given order. Requires alpha * a + beta * b to be covered, i.e.
    /// order <= total_order.
    Series substitute(int alpha, int beta, int order) const;

    bool operator==(const XYSeries&) const = default;

private:
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * (static_cast<std::size_t>(total_order_) + 1) +
               static_cast<std::size_t>(b);
    }
    void require_same_order(const XYSeries& rhs) const;

    int total_order_;
    std::vector<Coeff> c_;
};

} // namespace crankmex
