#include "crankmex/series.hpp"

#include <sstream>

namespace crankmex {

Series::Series(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.assign(static_cast<std::size_t>(order) + 1, Coeff(0));
}

Series Series::monomial(int order, int exponent, Coeff c) {
    Series s(order);
    if (exponent < 0) throw std::invalid_argument("series exponents must be >= 0");
    if (exponent <= order) s.c_[static_cast<std::size_t>(exponent)] = std::move(c);
    return s;
}

Series Series::make(int order, std::initializer_list<std::pair<int, Coeff>> monomials) {
    Series s(order);
    for (const auto& [e, c] : monomials) {
        if (e < 0) throw std::invalid_argument("series exponents must be >= 0");
        if (e <= order) s.c_[static_cast<std::size_t>(e)] += c;
    }
    return s;
}

const Coeff& Series::coeff(int k) const {
    if (k < 0 || k > order_) throw std::out_of_range("series coefficient index out of range");
    return c_[static_cast<std::size_t>(k)];
}

void Series::set_coeff(int k, Coeff value) {
    if (k < 0 || k > order_) throw std::out_of_range("series coefficient index out of range");
    c_[static_cast<std::size_t>(k)] = std::move(value);
}

void Series::add_coeff(int k, const Coeff& value) {
    if (k < 0 || k > order_) throw std::out_of_range("series coefficient index out of range");
    c_[static_cast<std::size_t>(k)] += value;
}

void Series::require_same_order(const Series& rhs) const {
    if (order_ != rhs.order_)
        throw std::invalid_argument("series order mismatch: " + std::to_string(order_) +
                                    " vs " + std::to_string(rhs.order_));
}

Series& Series::operator+=(const Series& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    a.require_same_order(b);
    Series out(a.order_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        std::size_t jmax = a.c_.size() - i;
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b.c_[j] == 0) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

Series& Series::operator*=(const Series& rhs) {
    *this = *this * rhs;
    return *this;
}

Series Series::operator-() const {
    Series out(order_);
    for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = -c_[k];
    return out;
}

Series Series::inverse() const {
    const Coeff& c0 = c_[0];
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("series inverse requires constant coefficient +-1");
    // b_n = -c0 * sum_{k=1..n} a_k b_{n-k}, using 1/c0 = c0.
    Series out(order_);
    out.c_[0] = c0;
    for (int n = 1; n <= order_; ++n) {
        Coeff acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += c_[static_cast<std::size_t>(k)] * out.c_[static_cast<std::size_t>(n - k)];
        out.c_[static_cast<std::size_t>(n)] = -c0 * acc;
    }
    return out;
}

Series Series::truncated(int new_order) const {
    if (new_order < 0 || new_order > order_)
        throw std::invalid_argument("truncated: new order must be in [0, order]");
    Series out(new_order);
    for (int k = 0; k <= new_order; ++k) out.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
    return out;
}

bool Series::is_zero() const {
    for (const Coeff& c : c_)
        if (c != 0) return false;
    return true;
}

std::string Series::pretty() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        const Coeff& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Coeff a = abs(c);
        if (a != 1 || k == 0) os << a.str();
        if (k > 0) {
            os << "q";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string Series::to_json() const {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k <= order_; ++k) {
        if (k) os << ",";
        os << "\"" << c_[static_cast<std::size_t>(k)].str() << "\"";
    }
    os << "]";
    return os.str();
}

} // namespace crankmex
