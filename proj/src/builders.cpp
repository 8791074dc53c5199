#include "crankmex/builders.hpp"

#include <cmath>

namespace crankmex {

namespace {

// Multiply s by (1 -+ q^shift) in place via a shifted add.
void mul_binomial_factor(Series& s, int shift, FactorSign sign) {
    Series shifted(s.order());
    for (int k = 0; k + shift <= s.order(); ++k) {
        const Coeff& c = s.coeff(k);
        if (c == 0) continue;
        shifted.add_coeff(k + shift, sign == FactorSign::minus ? -c : c);
    }
    s += shifted;
}

} // namespace

Series pochhammer(int base, int step, int count, int order, FactorSign sign) {
    if (step < 1) throw std::invalid_argument("pochhammer: step must be >= 1");
    if (base < 0) throw std::invalid_argument("pochhammer: base exponent must be >= 0");
    if (count < 0 && count != kInfinite)
        throw std::invalid_argument("pochhammer: count must be >= 0 or kInfinite");
    if (base == 0 && sign == FactorSign::minus && count != 0)
        throw std::invalid_argument("pochhammer: factor (1 - q^0) vanishes");
    if (base == 0 && count == kInfinite)
        throw std::invalid_argument("pochhammer: infinite product must start at exponent >= 1");
    Series s = Series::one(order);
    for (int i = 0; count == kInfinite || i < count; ++i) {
        long long shift = base + static_cast<long long>(step) * i;
        if (shift > order) break;
        mul_binomial_factor(s, static_cast<int>(shift), sign);
    }
    return s;
}

namespace {

Series directed_sum(int order, const std::function<long long(long long)>& f,
                    const std::function<int(long long)>& sign, long long k0, long long dk) {
    Series s(order);
    int misses = 0;
    // Any quadratic exponent leaves [0, order] for good well before this.
    long long limit = 4LL * order + 16;
    for (long long k = k0;; k += dk) {
        if (std::llabs(k) > limit)
            throw std::invalid_argument("sum: exponent function does not grow");
        long long e = f(k);
        if (e < 0)
            throw std::invalid_argument("sum: exponent function must be nonnegative");
        if (e > order) {
            if (++misses >= 3) break;
            continue;
        }
        misses = 0;
        int sg = sign(k);
        if (sg != 0) s.add_coeff(static_cast<int>(e), Coeff(sg));
    }
    return s;
}

} // namespace

Series unilateral_sum(int order, const std::function<long long(long long)>& f,
                      const std::function<int(long long)>& sign) {
    return directed_sum(order, f, sign, 0, 1);
}

Series bilateral_sum(int order, const std::function<long long(long long)>& f,
                     const std::function<int(long long)>& sign) {
    Series s = directed_sum(order, f, sign, 0, 1);
    s += directed_sum(order, f, sign, -1, -1);
    return s;
}

Series pentagonal_series(int order) {
    return bilateral_sum(
        order, [](long long k) { return k * (3 * k - 1) / 2; },
        [](long long k) { return (k % 2 == 0) ? 1 : -1; });
}

Series gaussian_binomial(int n, int d, int order) {
    if (d < 0 || d > n) throw std::invalid_argument("gaussian_binomial: need 0 <= d <= n");
    long long degree = static_cast<long long>(d) * (n - d);
    int work = static_cast<int>(std::max<long long>(order, degree));
    Series numerator = pochhammer(1, 1, n, work);
    Series denominator = pochhammer(1, 1, d, work) * pochhammer(1, 1, n - d, work);
    Series quotient = numerator * denominator.inverse();
    return quotient.truncated(order);
}

namespace {

// Geometric factor 1/(1 - z^zdir q^k) = sum over i of z^(zdir*i) q^(k*i).
ZSeries z_geometric(int order, int zdir, int k) {
    ZSeries g(order);
    for (int i = 0; static_cast<long long>(i) * k <= order && i <= order; ++i)
        g.add_coeff(zdir * i, i * k, 1);
    return g;
}

} // namespace

ZSeries crank_gf_bivariate(int order) {
    ZSeries result = ZSeries::one(order);
    result.mul_univariate(pochhammer(1, 1, kInfinite, order));
    for (int k = 1; k <= order; ++k) {
        result *= z_geometric(order, +1, k);
        result *= z_geometric(order, -1, k);
    }
    return result;
}

ZSeries crank_le0_bivariate(int order) {
    ZSeries result(order);
    for (int n = 0;; ++n) {
        long long base = static_cast<long long>(n) * (n + 1);
        if (base > order) break;
        ZSeries term = ZSeries::monomial(order, 2 * n, static_cast<int>(base));
        for (int i = 1; i <= n; ++i) term *= z_geometric(order, +1, i);
        term.mul_univariate(pochhammer(1, 1, n, order).inverse());
        result += term;
    }
    return result;
}

XYSeries carlitz_product(int total_order) {
    const int D = total_order;
    XYSeries result = XYSeries::one(D);
    for (int n = 1; 2 * n - 1 <= D; ++n) {
        if (2 * n <= D) {
            XYSeries f = XYSeries::one(D);
            f.add_coeff(n, n, -1);
            result *= f;
        }
        XYSeries g = XYSeries::one(D);
        g.add_coeff(n, n - 1, 1);
        result *= g;
        XYSeries h = XYSeries::one(D);
        h.add_coeff(n - 1, n, 1);
        result *= h;
    }
    return result;
}

XYSeries carlitz_theta(int total_order) {
    const int D = total_order;
    XYSeries result(D);
    for (long long n = 0;; ++n) {
        if (n * n > D) break;
        // x^{n(n+1)/2} y^{n(n-1)/2} has total degree n^2.
        result.add_coeff(static_cast<int>(n * (n + 1) / 2), static_cast<int>(n * (n - 1) / 2), 1);
        if (n > 0)
            result.add_coeff(static_cast<int>(n * (n - 1) / 2), static_cast<int>(n * (n + 1) / 2),
                             1);
    }
    return result;
}

namespace {

void require_fine_params(int alpha, int beta) {
    if (alpha < 1) throw std::invalid_argument("fine: alpha must be >= 1");
    if (beta < 0) throw std::invalid_argument("fine: beta must be >= 0");
}

} // namespace

Series fine_lhs(int alpha, int beta, int order) {
    require_fine_params(alpha, beta);
    Series sum(order);
    for (int n = 0; static_cast<long long>(alpha) * n <= order; ++n) {
        Series term = Series::monomial(order, alpha * n);
        term *= pochhammer(1, 1, n, order).inverse();
        term *= pochhammer(beta + 1, 1, n, order).inverse();
        sum += term;
    }
    return pochhammer(alpha, 1, kInfinite, order) * sum;
}

Series fine_mid(int alpha, int beta, int order) {
    require_fine_params(alpha, beta);
    Series sum(order);
    for (int n = 0;; ++n) {
        long long e = static_cast<long long>(beta) * n + static_cast<long long>(n) * (n + 1) / 2;
        if (e > order) break;
        Series term = Series::monomial(order, static_cast<int>(e), (n % 2 == 0) ? 1 : -1);
        term *= pochhammer(alpha, 1, n, order);
        term *= pochhammer(1, 1, n, order).inverse();
        sum += term;
    }
    return pochhammer(beta + 1, 1, kInfinite, order).inverse() * sum;
}

Series fine_rhs(int alpha, int beta, int order) {
    require_fine_params(alpha, beta);
    Series sum(order);
    for (int n = 0;; ++n) {
        long long e = static_cast<long long>(alpha + beta) * n + static_cast<long long>(n) * n;
        if (e > order) break;
        Series term = Series::monomial(order, static_cast<int>(e));
        term *= pochhammer(1, 1, n, order).inverse();
        term *= pochhammer(beta + 1, 1, n, order).inverse();
        sum += term;
    }
    return sum;
}

} // namespace crankmex
