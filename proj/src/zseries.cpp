#include "crankmex/zseries.hpp"

#include <sstream>

namespace crankmex {

ZSeries::ZSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.assign((2 * static_cast<std::size_t>(order) + 1) * (static_cast<std::size_t>(order) + 1),
              Coeff(0));
}

ZSeries ZSeries::monomial(int order, int z_exp, int q_exp, Coeff c) {
    ZSeries s(order);
    if (q_exp < 0) throw std::invalid_argument("q exponent must be >= 0");
    if (q_exp <= order && z_exp >= -order && z_exp <= order)
        s.c_[s.idx(z_exp, q_exp)] = std::move(c);
    return s;
}

const Coeff& ZSeries::coeff(int z_exp, int q_exp) const {
    if (q_exp < 0 || q_exp > order_ || z_exp < -order_ || z_exp > order_)
        throw std::out_of_range("zseries coefficient index out of range");
    return c_[idx(z_exp, q_exp)];
}

void ZSeries::set_coeff(int z_exp, int q_exp, Coeff value) {
    if (q_exp < 0 || q_exp > order_ || z_exp < -order_ || z_exp > order_)
        throw std::out_of_range("zseries coefficient index out of range");
    c_[idx(z_exp, q_exp)] = std::move(value);
}

void ZSeries::add_coeff(int z_exp, int q_exp, const Coeff& value) {
    if (q_exp < 0 || q_exp > order_ || z_exp < -order_ || z_exp > order_)
        throw std::out_of_range("zseries coefficient index out of range");
    c_[idx(z_exp, q_exp)] += value;
}

void ZSeries::require_same_order(const ZSeries& rhs) const {
    if (order_ != rhs.order_)
        throw std::invalid_argument("zseries order mismatch: " + std::to_string(order_) +
                                    " vs " + std::to_string(rhs.order_));
}

ZSeries& ZSeries::operator+=(const ZSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

namespace {

struct ZTerm {
    int m, n;
    const Coeff* c;
};

template <typename S>
std::vector<ZTerm> collect_nonzero(const S& s, int order) {
    std::vector<ZTerm> terms;
    for (int n = 0; n <= order; ++n)
        for (int m = -order; m <= order; ++m) {
            const Coeff& c = s.coeff(m, n);
            if (c != 0) terms.push_back({m, n, &c});
        }
    return terms;
}

} // namespace

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    a.require_same_order(b);
    const int N = a.order_;
    ZSeries out(N);
    auto ta = collect_nonzero(a, N);
    auto tb = collect_nonzero(b, N);
    for (const ZTerm& x : ta) {
        for (const ZTerm& y : tb) {
            int n = x.n + y.n;
            if (n > N) continue;
            int m = x.m + y.m;
            if (m < -N || m > N) continue;
            out.c_[out.idx(m, n)] += *x.c * *y.c;
        }
    }
    return out;
}

ZSeries& ZSeries::operator*=(const ZSeries& rhs) {
    *this = *this * rhs;
    return *this;
}

ZSeries& ZSeries::mul_univariate(const Series& s) {
    if (s.order() != order_)
        throw std::invalid_argument("zseries/series order mismatch");
    ZSeries out(order_);
    auto terms = collect_nonzero(*this, order_);
    for (const ZTerm& x : terms) {
        for (int n2 = 0; n2 + x.n <= order_; ++n2) {
            const Coeff& cb = s.coeff(n2);
            if (cb == 0) continue;
            out.c_[out.idx(x.m, x.n + n2)] += *x.c * cb;
        }
    }
    *this = std::move(out);
    return *this;
}

Series ZSeries::collapse_z(int z_sign) const {
    if (z_sign != 1 && z_sign != -1)
        throw std::invalid_argument("collapse_z expects +1 or -1");
    Series out(order_);
    for (int n = 0; n <= order_; ++n) {
        Coeff acc = 0;
        for (int m = -order_; m <= order_; ++m) {
            const Coeff& c = c_[idx(m, n)];
            if (c == 0) continue;
            bool negate = z_sign == -1 && ((m % 2) != 0);
            if (negate)
                acc -= c;
            else
                acc += c;
        }
        out.set_coeff(n, std::move(acc));
    }
    return out;
}

bool ZSeries::z_symmetric() const {
    for (int n = 0; n <= order_; ++n)
        for (int m = 1; m <= order_; ++m)
            if (c_[idx(m, n)] != c_[idx(-m, n)]) return false;
    return true;
}

std::string ZSeries::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (int n = 0; n <= order_; ++n) {
        for (int m = -order_; m <= order_; ++m) {
            const Coeff& c = c_[idx(m, n)];
            if (c == 0) continue;
            if (!first) os << ",";
            os << "{\"z\":" << m << ",\"q\":" << n << ",\"c\":\"" << c.str() << "\"}";
            first = false;
        }
    }
    os << "]";
    return os.str();
}

} // namespace crankmex
