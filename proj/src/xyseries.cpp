#include "crankmex/xyseries.hpp"

namespace crankmex {

XYSeries::XYSeries(int total_order) : total_order_(total_order) {
    if (total_order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.assign((static_cast<std::size_t>(total_order) + 1) *
                  (static_cast<std::size_t>(total_order) + 1),
              Coeff(0));
}

XYSeries XYSeries::monomial(int total_order, int x_exp, int y_exp, Coeff c) {
    XYSeries s(total_order);
    if (x_exp < 0 || y_exp < 0) throw std::invalid_argument("xy exponents must be >= 0");
    if (x_exp + y_exp <= total_order) s.c_[s.idx(x_exp, y_exp)] = std::move(c);
    return s;
}

const Coeff& XYSeries::coeff(int x_exp, int y_exp) const {
    if (x_exp < 0 || y_exp < 0 || x_exp + y_exp > total_order_)
        throw std::out_of_range("xyseries coefficient index out of range");
    return c_[idx(x_exp, y_exp)];
}

void XYSeries::add_coeff(int x_exp, int y_exp, const Coeff& value) {
    if (x_exp < 0 || y_exp < 0 || x_exp + y_exp > total_order_)
        throw std::out_of_range("xyseries coefficient index out of range");
    c_[idx(x_exp, y_exp)] += value;
}

void XYSeries::require_same_order(const XYSeries& rhs) const {
    if (total_order_ != rhs.total_order_)
        throw std::invalid_argument("xyseries order mismatch: " + std::to_string(total_order_) +
                                    " vs " + std::to_string(rhs.total_order_));
}

XYSeries& XYSeries::operator+=(const XYSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

XYSeries operator*(const XYSeries& a, const XYSeries& b) {
    a.require_same_order(b);
    const int D = a.total_order_;
    XYSeries out(D);
    struct Term {
        int a, b;
        const Coeff* c;
    };
    std::vector<Term> ta, tb;
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j) {
            if (a.c_[a.idx(i, j)] != 0) ta.push_back({i, j, &a.c_[a.idx(i, j)]});
            if (b.c_[b.idx(i, j)] != 0) tb.push_back({i, j, &b.c_[b.idx(i, j)]});
        }
    for (const Term& x : ta) {
        for (const Term& y : tb) {
            if (x.a + y.a + x.b + y.b > D) continue;
            out.c_[out.idx(x.a + y.a, x.b + y.b)] += *x.c * *y.c;
        }
    }
    return out;
}

XYSeries& XYSeries::operator*=(const XYSeries& rhs) {
    *this = *this * rhs;
    return *this;
}

Series XYSeries::substitute(int alpha, int beta, int order) const {
    if (alpha < 1 || beta < 1)
        throw std::invalid_argument("substitute: exponents must be >= 1");
    if (order > total_order_)
        throw std::invalid_argument("substitute: target order exceeds total order");
    Series out(order);
    for (int a = 0; a <= total_order_; ++a) {
        for (int b = 0; a + b <= total_order_; ++b) {
            const Coeff& c = c_[idx(a, b)];
            if (c == 0) continue;
            long long e = static_cast<long long>(alpha) * a + static_cast<long long>(beta) * b;
            if (e <= order) out.add_coeff(static_cast<int>(e), c);
        }
    }
    return out;
}

} // namespace crankmex
