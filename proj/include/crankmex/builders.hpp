#pragma once

#include <functional>

#include "crankmex/series.hpp"
#include "crankmex/xyseries.hpp"
#include "crankmex/zseries.hpp"

namespace crankmex {

/// Sign inside Pochhammer factors: Minus builds (1 - q^e) factors as in
/// (q^b; q^s)_k, Plus builds (1 + q^e) factors as in (-q^b; q^s)_k.
enum class FactorSign { minus, plus };

inline constexpr int kInfinite = -1;

/// Product of (1 -+ q^{base + step*i}) for i = 0, 1, ..., truncated at
/// the series order. `count` bounds the number of factors; kInfinite
/// keeps multiplying until the exponents leave the truncation window.
/// A zero factor (base 0 with FactorSign::minus) is rejected, as is an
/// infinite product starting at base 0.
Series pochhammer(int base, int step, int count, int order,
                  FactorSign sign = FactorSign::minus);

/// Sum of sign(k) * q^{f(k)} over k >= 0 while f stays within range.
/// f must be eventually increasing; wandering exponents throw.
Series unilateral_sum(int order, const std::function<long long(long long)>& f,
                      const std::function<int(long long)>& sign);

/// Sum of sign(k) * q^{f(k)} over all integers k. The k-range is found
/// by scanning outward until f exceeds the order three times in a row
/// in each direction, which every coercive quadratic satisfies; a
/// non-coercive f throws.
Series bilateral_sum(int order, const std::function<long long(long long)>& f,
                     const std::function<int(long long)>& sign);

/// Euler product (q;q)_inf expanded by the pentagonal number theorem,
/// as a bilateral sum over k of (-1)^k q^{k(3k-1)/2}.
Series pentagonal_series(int order);

/// The Gaussian polynomial [n choose d], an exact polynomial of degree
/// d(n-d), returned at the requested order (which may truncate it).
Series gaussian_binomial(int n, int d, int order);

/// Crank generating function (q;q)_inf / ((zq;q)_inf (q/z;q)_inf).
/// The coefficient of z^m q^n is the crank count M(m, n), including the
/// standard sign conventions at n <= 1.
ZSeries crank_gf_bivariate(int order);

/// Generating function for partitions with nonpositive crank, with z
/// marking the length: sum over n of z^{2n} q^{n(n+1)} / ((zq;q)_n (q;q)_n).
ZSeries crank_le0_bivariate(int order);

/// Both sides of the theta-product identity
///   prod (1 - x^n y^n)(1 + x^n y^{n-1})(1 + x^{n-1} y^n)
///     = sum over all integers n of x^{n(n+1)/2} y^{n(n-1)/2},
/// truncated at total degree D.
XYSeries carlitz_product(int total_order);
XYSeries carlitz_theta(int total_order);

/// The three members of Fine's transformation chain, specialized to the
/// monomial parameters t = q^alpha, b = q^beta (alpha >= 1, beta >= 0):
///   lhs  = (t;q)_inf  sum t^n / ((q;q)_n (bq;q)_n)
///   mid  = 1/(bq;q)_inf  sum (t;q)_n / (q;q)_n (-b)^n q^{n(n+1)/2}
///   rhs  = sum (bt)^n q^{n^2} / ((q;q)_n (bq;q)_n)
/// All three agree as truncated series.
Series fine_lhs(int alpha, int beta, int order);
Series fine_mid(int alpha, int beta, int order);
Series fine_rhs(int alpha, int beta, int order);

} // namespace crankmex
