#include "crankmex/identities.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "crankmex/builders.hpp"
#include "crankmex/partition.hpp"
#include "crankmex/xyseries.hpp"
#include "crankmex/zseries.hpp"

namespace crankmex::identities {

namespace {

void record_mismatch(VerifyReport& r, std::vector<long long> exponents, std::string lhs,
                     std::string rhs) {
    r.pass = false;
    if (!r.first_mismatch)
        r.first_mismatch = Mismatch{std::move(exponents), std::move(lhs), std::move(rhs)};
}

void compare_zseries(const ZSeries& lhs, const ZSeries& rhs, VerifyReport& r) {
    const int N = lhs.order();
    for (int n = 0; n <= N; ++n)
        for (int m = -N; m <= N; ++m)
            if (lhs.coeff(m, n) != rhs.coeff(m, n)) {
                record_mismatch(r, {n, m}, lhs.coeff(m, n).str(), rhs.coeff(m, n).str());
                return;
            }
}

void compare_xyseries(const XYSeries& lhs, const XYSeries& rhs, VerifyReport& r) {
    const int D = lhs.total_order();
    for (int total = 0; total <= D; ++total)
        for (int a = 0; a <= total; ++a) {
            int b = total - a;
            if (lhs.coeff(a, b) != rhs.coeff(a, b)) {
                record_mismatch(r, {a, b}, lhs.coeff(a, b).str(), rhs.coeff(a, b).str());
                return;
            }
        }
}

// Series of crank counts with m >= j, conventions included.
Series crank_ge_series(int j, int order, const Tables& t) {
    Series s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, Coeff(t.crank.crank_ge(n, j)));
    return s;
}

// RHS of the alternating bounded-crank expansion:
// 1/(q;q)_inf sum_{n>=0} (-1)^n q^{n(n+1)/2 + j(n+1)}.
Series crank_ge_alternating_series(int j, int order) {
    Series staircase = unilateral_sum(
        order,
        [j](long long k) { return k * (k + 1) / 2 + static_cast<long long>(j) * (k + 1); },
        [](long long k) { return k % 2 == 0 ? 1 : -1; });
    return pochhammer(1, 1, kInfinite, order).inverse() * staircase;
}

// RHS of the positive-sum bounded-crank expansion:
// sum_{n>=0} q^{(n+1)(n+j)} / ((q;q)_n (q;q)_{n+j}).
Series crank_ge_positive_series(int j, int order) {
    Series sum(order);
    for (int n = 0;; ++n) {
        long long e = static_cast<long long>(n + 1) * (n + j);
        if (e > order) break;
        Series term = Series::monomial(order, static_cast<int>(e));
        term *= pochhammer(1, 1, n, order).inverse();
        term *= pochhammer(1, 1, n + j, order).inverse();
        sum += term;
    }
    return sum;
}

// (q;q)_inf sum_{n>=0} q^{n+j} / ((q;q)_n (q;q)_{n+j}).
Series fine_chain_lhs(int j, int order) {
    Series sum(order);
    for (int n = 0; n + j <= order; ++n) {
        Series term = Series::monomial(order, n + j);
        term *= pochhammer(1, 1, n, order).inverse();
        term *= pochhammer(1, 1, n + j, order).inverse();
        sum += term;
    }
    return pochhammer(1, 1, kInfinite, order) * sum;
}

// sum_n q^{n(n+1)} / ((q;q)_n)^2
Series odd_mex_double_pochhammer_series(int order) {
    Series sum(order);
    for (int n = 0;; ++n) {
        long long e = static_cast<long long>(n) * (n + 1);
        if (e > order) break;
        Series inv = pochhammer(1, 1, n, order).inverse();
        sum += Series::monomial(order, static_cast<int>(e)) * inv * inv;
    }
    return sum;
}

// sum_n q^{n(n+1)} / (q^2;q^2)_n
Series odd_mex_even_pochhammer_series(int order) {
    Series sum(order);
    for (int n = 0;; ++n) {
        long long e = static_cast<long long>(n) * (n + 1);
        if (e > order) break;
        sum += Series::monomial(order, static_cast<int>(e)) *
               pochhammer(2, 2, n, order).inverse();
    }
    return sum;
}

// Signed indicator of n = m(3m+-1): (-1)^{m+1} at those n, else 0.
// These are the doubled generalized pentagonal numbers.
Count double_pentagonal_sign(int n) {
    for (long long m = 0;; ++m) {
        long long lo = m * (3 * m - 1);
        long long hi = m * (3 * m + 1);
        if (lo > n && hi > n) return 0;
        if (lo == n || hi == n) return m % 2 == 0 ? -1 : 1;
    }
}

Series mex_series(int order, const Tables& t, Count MexCounts::*field) {
    Series s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, Coeff(t.mex.at(n).*field));
    return s;
}

std::vector<IdentityEntry> build_catalog() {
    std::vector<IdentityEntry> entries;

    entries.push_back(
        {"garvan-bivariate",
         "crank generating function (q;q)inf/((zq;q)inf (q/z;q)inf) matches the M(m,n) table",
         {},
         [](const Params&, int N, const Tables& t, VerifyReport& r) {
             ZSeries gf = crank_gf_bivariate(N);
             ZSeries table(N);
             for (int n = 0; n <= N; ++n)
                 for (int m = -n; m <= n; ++m)
                     table.add_coeff(m, n, Coeff(t.crank.M(m, n)));
             compare_zseries(gf, table, r);
         }});

    entries.push_back(
        {"garvan-fixed-m",
         "fixed-m crank series equals 1/(q;q)inf sum (-1)^(n-1) q^(n(n-1)/2+n|m|)(1-q^n)",
         {{"m", -8, 8}},
         [](const Params& p, int N, const Tables& t, VerifyReport& r) {
             int m = p.at("m");
             int am = m < 0 ? -m : m;
             Series sum(N);
             for (int n = 1;; ++n) {
                 long long base =
                     static_cast<long long>(n) * (n - 1) / 2 + static_cast<long long>(n) * am;
                 if (base > N) break;
                 int sign = n % 2 == 1 ? 1 : -1;
                 sum.add_coeff(static_cast<int>(base), sign);
                 if (base + n <= N) sum.add_coeff(static_cast<int>(base + n), -sign);
             }
             Series rhs = pochhammer(1, 1, kInfinite, N).inverse() * sum;
             Series lhs(N);
             for (int n = 0; n <= N; ++n) lhs.set_coeff(n, Coeff(t.crank.M(m, n)));
             compare_series(lhs, rhs, r);
         }});

    entries.push_back({"crank-symmetry",
                       "M(m,n) = M(-m,n)",
                       {},
                       [](const Params&, int N, const Tables& t, VerifyReport& r) {
                           for (int n = 0; n <= N; ++n)
                               for (int m = 0; m <= 8; ++m)
                                   compare_counts(t.crank.M(m, n), t.crank.M(-m, n), {n, m}, r);
                       }});

    entries.push_back(
        {"qbinomial-excess",
         "1/(q;q)_d = [n choose d] / (q^(n-d+1);q)_d as truncated series",
         {},
         [](const Params&, int N, const Tables&, VerifyReport& r) {
             for (int n = 0; n <= 8; ++n)
                 for (int d = 0; d <= n; ++d) {
                     Series lhs = pochhammer(1, 1, d, N).inverse();
                     Series rhs = gaussian_binomial(n, d, N) *
                                  pochhammer(n - d + 1, 1, d, N).inverse();
                     compare_series(lhs, rhs, r, {n, d});
                     if (!r.pass) return;
                 }
         }});

    entries.push_back(
        {"thm1.2",
         "crank >= j count series equals the alternating staircase expansion",
         {{"j", 0, 5}},
         [](const Params& p, int N, const Tables& t, VerifyReport& r) {
             int j = p.at("j");
             compare_series(crank_ge_series(j, N, t), crank_ge_alternating_series(j, N), r);
         }});

    entries.push_back(
        {"thm2.1",
         "crank >= j count series equals the positive rectangle-sum expansion",
         {{"j", 0, 5}},
         [](const Params& p, int N, const Tables& t, VerifyReport& r) {
             int j = p.at("j");
             compare_series(crank_ge_series(j, N, t), crank_ge_positive_series(j, N), r);
         }});

    entries.push_back(
        {"lemma2.2",
         "the alternating and positive bounded-crank expansions agree as pure series",
         {{"j", 0, 5}},
         [](const Params& p, int N, const Tables&, VerifyReport& r) {
             int j = p.at("j");
             compare_series(crank_ge_alternating_series(j, N), crank_ge_positive_series(j, N),
                            r);
         }});

    entries.push_back(
        {"fine-specialized",
         "Fine's transformation chain at t=q, b=q^j",
         {{"j", 0, 5}},
         [](const Params& p, int N, const Tables&, VerifyReport& r) {
             int j = p.at("j");
             Series lhs = fine_chain_lhs(j, N);
             compare_series(lhs, crank_ge_alternating_series(j, N), r);
             compare_series(lhs, crank_ge_positive_series(j, N), r);
             // The general monomial specialization behind the chain.
             Series f = fine_lhs(1, j, N);
             compare_series(f, fine_mid(1, j, N), r);
             compare_series(f, fine_rhs(1, j, N), r);
         }});

    entries.push_back(
        {"ewell",
         "1/(q;q)inf sum (-q)^(n(n+1)/2) = (-q^2;q^2)inf",
         {},
         [](const Params&, int N, const Tables&, VerifyReport& r) {
             Series staircase = unilateral_sum(
                 N, [](long long k) { return k * (k + 1) / 2; },
                 [](long long k) { return (k * (k + 1) / 2) % 2 == 0 ? 1 : -1; });
             Series lhs = pochhammer(1, 1, kInfinite, N).inverse() * staircase;
             Series rhs = pochhammer(2, 2, kInfinite, N, FactorSign::plus);
             compare_series(lhs, rhs, r);
             // Counting interpretation of the product side.
             PartitionFilter distinct_even;
             distinct_even.distinct = true;
             distinct_even.part_parity = 0;
             for (int n = 0; n <= N; ++n) {
                 Count c = 0;
                 for_each_partition(n, distinct_even, [&](const Partition&) { ++c; });
                 compare_counts(static_cast<Count>(rhs.coeff(n).convert_to<long long>()), c,
                                {n}, r);
             }
         }});

    entries.push_back(
        {"m14-gf",
         "both expressions for the mex = 1 (mod 4) series match the enumeration",
         {},
         [](const Params&, int N, const Tables& t, VerifyReport& r) {
             Series enumerated = mex_series(N, t, &MexCounts::m14);
             Series sum(N);
             for (long long k = 0;; ++k) {
                 long long base = 2 * k * (4 * k + 1);
                 if (base > N) break;
                 sum.add_coeff(static_cast<int>(base), 1);
                 if (base + 4 * k + 1 <= N) sum.add_coeff(static_cast<int>(base + 4 * k + 1), -1);
             }
             compare_series(enumerated, pochhammer(1, 1, kInfinite, N).inverse() * sum, r);
             // Half-sum form, doubled to stay in integer coefficients.
             Series doubled = enumerated + enumerated;
             compare_series(doubled, odd_mex_double_pochhammer_series(N) +
                                         odd_mex_even_pochhammer_series(N),
                            r);
         }});

    entries.push_back(
        {"m34-gf",
         "both expressions for the mex = 3 (mod 4) series match the enumeration",
         {},
         [](const Params&, int N, const Tables& t, VerifyReport& r) {
             Series enumerated = mex_series(N, t, &MexCounts::m34);
             Series sum(N);
             for (long long k = 0;; ++k) {
                 long long base = (2 * k + 1) * (4 * k + 3);
                 if (base > N) break;
                 sum.add_coeff(static_cast<int>(base), 1);
                 if (base + 4 * k + 3 <= N) sum.add_coeff(static_cast<int>(base + 4 * k + 3), -1);
             }
             compare_series(enumerated, pochhammer(1, 1, kInfinite, N).inverse() * sum, r);
             Series doubled = enumerated + enumerated;
             compare_series(doubled, odd_mex_double_pochhammer_series(N) -
                                         odd_mex_even_pochhammer_series(N),
                            r);
         }});

    entries.push_back(
        {"prop-o13",
         "m_{1,4}(n) - m_{3,4}(n) is 0 for odd n and q(n/2) for even n",
         {},
         [](const Params&, int N, const Tables& t, VerifyReport& r) {
             for (int n = 1; n <= std::min(N, 30); ++n) {
                 Count expect = n % 2 == 0 ? distinct_count(n / 2) : 0;
                 compare_counts(t.mex.at(n).m14 - t.mex.at(n).m34, expect, {n}, r);
             }
         }});

    entries.push_back(
        {"thm-4ways",
         "length-parity refinements pair m_{1,4} with m_{3,4} through q^o and q^e",
         {},
         [](const Params&, int N, const Tables& t, VerifyReport& r) {
             for (int n = 1; n <= std::min(N, 30); ++n) {
                 Count qo = n % 2 == 0 ? distinct_count(n / 2, LengthParity::odd) : 0;
                 Count qe = n % 2 == 0 ? distinct_count(n / 2, LengthParity::even) : 0;
                 compare_counts(t.mex.at(n).m14_odd, t.mex.at(n).m34_even + qo, {n, 0}, r);
                 compare_counts(t.mex.at(n).m14_even, t.mex.at(n).m34_odd + qe, {n, 1}, r);
             }
         }});

    entries.push_back(
        {"cor-oe",
         "m^o_{1,2} - m^e_{1,2} is the signed indicator of n = m(3m+-1)",
         {},
         [](const Params&, int N, const Tables& t, VerifyReport& r) {
             for (int n = 0; n <= std::min(N, 30); ++n)
                 compare_counts(t.mex.at(n).m12_odd - t.mex.at(n).m12_even,
                                double_pentagonal_sign(n), {n}, r);
             // Equivalent generating function: the length-signed odd-mex
             // series sums to (q^2;q^2)inf. Each part contributes a sign,
             // so the full (-q;q)inf sits in the denominator.
             Series sum(N);
             for (long long k = 0;; ++k) {
                 long long base = k * (2 * k + 1);
                 if (base > N) break;
                 sum.add_coeff(static_cast<int>(base), 1);
                 if (base + 2 * k + 1 <= N) sum.add_coeff(static_cast<int>(base + 2 * k + 1), 1);
             }
             Series lhs = pochhammer(1, 1, kInfinite, N, FactorSign::plus).inverse() * sum;
             compare_series(lhs, pochhammer(2, 2, kInfinite, N), r);
         }});

    entries.push_back(
        {"carlitz",
         "theta-product identity in x, y and its q^3, q substitution",
         {},
         [](const Params&, int N, const Tables&, VerifyReport& r) {
             const int D = 30;
             compare_xyseries(carlitz_product(D), carlitz_theta(D), r);
             Series theta_sub = carlitz_theta(N).substitute(3, 1, N);
             Series product_sub = carlitz_product(N).substitute(3, 1, N);
             Series bilateral = bilateral_sum(
                 N, [](long long k) { return k * (2 * k + 1); },
                 [](long long) { return 1; });
             compare_series(theta_sub, bilateral, r);
             compare_series(product_sub, bilateral, r);
             Series lhs = pochhammer(4, 4, kInfinite, N).inverse() * bilateral;
             Series rhs = pochhammer(1, 4, kInfinite, N, FactorSign::plus) *
                          pochhammer(3, 4, kInfinite, N, FactorSign::plus);
             compare_series(lhs, rhs, r);
         }});

    entries.push_back(
        {"parity-m12",
         "m_{1,2}(n) is odd exactly at n = m(3m+-1)",
         {},
         [](const Params&, int N, const Tables& t, VerifyReport& r) {
             for (int n = 0; n <= std::min(N, 40); ++n) {
                 Count parity = t.mex.at(n).m12 % 2;
                 Count expect = double_pentagonal_sign(n) != 0 ? 1 : 0;
                 compare_counts(parity, expect, {n}, r);
             }
         }});

    entries.push_back(
        {"oddstats",
         "at odd weight the four refined odd-mex statistics coincide",
         {},
         [](const Params&, int N, const Tables& t, VerifyReport& r) {
             for (int n = 1; n <= std::min(N, 31); n += 2) {
                 const MexCounts& c = t.mex.at(n);
                 compare_counts(c.m14, c.m34, {n, 0}, r);
                 compare_counts(c.m14, c.m12_odd, {n, 1}, r);
                 compare_counts(c.m14, c.m12_even, {n, 2}, r);
             }
         }});

    entries.push_back(
        {"huh-kim",
         "length-parity split of crank <= 0 equals the mex mod 4 split",
         {},
         [](const Params&, int N, const Tables& t, VerifyReport& r) {
             ZSeries gf = crank_le0_bivariate(N);
             for (int n = 0; n <= N; ++n) {
                 Coeff even = 0, odd = 0;
                 for (int k = 0; k <= N; ++k) {
                     const Coeff& c = gf.coeff(k, n);
                     if (c == 0) continue;
                     (k % 2 == 0 ? even : odd) += c;
                 }
                 // The z-degree marks the length; parity sums give the
                 // theorem, and they match the table's convention.
                 compare_counts(static_cast<Count>(even.convert_to<long long>()),
                                t.mex.at(n).m14, {n, 0}, r);
                 compare_counts(static_cast<Count>(odd.convert_to<long long>()),
                                t.mex.at(n).m34, {n, 1}, r);
                 compare_counts(static_cast<Count>(even.convert_to<long long>()),
                                t.crank.le0_even_length(n), {n, 2}, r);
                 compare_counts(static_cast<Count>(odd.convert_to<long long>()),
                                t.crank.le0_odd_length(n), {n, 3}, r);
             }
             // Per-length coefficients against direct enumeration; the
             // series omits weight 1, whose lone partition is carried by
             // the n <= 1 conventions instead.
             for (int n = 0; n <= N; ++n) {
                 if (n == 1) continue;
                 std::vector<Count> by_length(static_cast<std::size_t>(n) + 2, 0);
                 for_each_partition(n, [&](const Partition& p) {
                     if (crank(p) <= 0) ++by_length[static_cast<std::size_t>(p.length())];
                 });
                 for (int k = 0; k <= n + 1; ++k) {
                     Coeff c = k <= N ? gf.coeff(k, n) : Coeff(0);
                     compare_counts(static_cast<Count>(c.convert_to<long long>()),
                                    by_length[static_cast<std::size_t>(k)], {n, 4, k}, r);
                 }
             }
             compare_series(gf.collapse_z(-1), odd_mex_even_pochhammer_series(N), r);
         }});

    entries.push_back(
        {"cor3.8",
         "even/odd length difference of crank <= 0 counts and its product form",
         {},
         [](const Params&, int N, const Tables& t, VerifyReport& r) {
             for (int n = 0; n <= std::min(N, 30); ++n) {
                 Count expect = n % 2 == 0 ? distinct_count(n / 2) : 0;
                 compare_counts(t.crank.le0_even_length(n) - t.crank.le0_odd_length(n), expect,
                                {n}, r);
             }
             Series sum(N);
             for (int d = 0;; ++d) {
                 long long e = static_cast<long long>(d) * d + d;
                 if (e > N) break;
                 sum += Series::monomial(N, static_cast<int>(e)) *
                        pochhammer(2, 2, d, N).inverse();
             }
             compare_series(sum, pochhammer(2, 2, kInfinite, N, FactorSign::plus), r);
         }});

    entries.push_back(
        {"frobenius-crank",
         "crank-0 partitions against Frobenius-symbol predicates",
         {},
         [](const Params&, int N, const Tables& t, VerifyReport& r) {
             // (a) Enumerated crank-0 counts match
             // 1 + sum_{d>=1} q^{d^2+2d} / ((q;q)_d (q^2;q)_{d-1}).
             Series gf = Series::one(N);
             for (int d = 1;; ++d) {
                 long long e = static_cast<long long>(d) * d + 2 * d;
                 if (e > N) break;
                 Series term = Series::monomial(N, static_cast<int>(e));
                 term *= pochhammer(1, 1, d, N).inverse();
                 term *= pochhammer(2, 1, d - 1, N).inverse();
                 gf += term;
             }
             Series enumerated(N);
             for (int n = 0; n <= N; ++n) enumerated.set_coeff(n, Coeff(t.crank.enumerated(0, n)));
             compare_series(enumerated, gf, r);

             // (b) M(0,n) = a(n) - a(n-1) with a counting no-zero symbols;
             // the n <= 1 conventions make this exact from n = 0 on.
             std::vector<Count> a(static_cast<std::size_t>(N) + 1, 0);
             for (int n = 0; n <= N; ++n) a[static_cast<std::size_t>(n)] = frobenius_count(n, symbol_has_no_zero);
             for (int n = 0; n <= N; ++n) {
                 Count prev = n == 0 ? 0 : a[static_cast<std::size_t>(n) - 1];
                 compare_counts(t.crank.M(0, n), a[static_cast<std::size_t>(n)] - prev, {n, 0}, r);
             }

             // (c) crank-0 count equals no-zero symbols whose first two
             // bottom entries differ by one.
             for (int n = 0; n <= N; ++n) {
                 Count c = frobenius_count(n, [](const FrobeniusSymbol& f) {
                     return symbol_has_no_zero(f) && symbol_bottom_first_two_differ_by_one(f);
                 });
                 compare_counts(t.crank.enumerated(0, n), c, {n, 1}, r);
             }

             // (d) crank >= j at weight n against no-j-in-top-row at n-j.
             for (int j = 0; j <= 4; ++j)
                 for (int n = 0; n <= std::min(N, 25); ++n) {
                     Count f = frobenius_count(
                         n - j, [j](const FrobeniusSymbol& s) { return symbol_top_row_lacks(s, j); });
                     compare_counts(t.crank.crank_ge(n, j), f, {n, 2, j}, r);
                 }
         }});

    return entries;
}

} // namespace

const std::vector<IdentityEntry>& catalog() {
    static const std::vector<IdentityEntry> entries = build_catalog();
    return entries;
}

const IdentityEntry& find_entry(const std::string& id) {
    for (const IdentityEntry& e : catalog())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown identity id: " + id);
}

void compare_series(const Series& lhs, const Series& rhs, VerifyReport& r,
                    std::vector<long long> tag) {
    for (int k = 0; k <= lhs.order(); ++k)
        if (lhs.coeff(k) != rhs.coeff(k)) {
            std::vector<long long> exps = tag;
            exps.push_back(k);
            record_mismatch(r, std::move(exps), lhs.coeff(k).str(), rhs.coeff(k).str());
            return;
        }
}

void compare_counts(Count lhs, Count rhs, std::vector<long long> exponents, VerifyReport& r) {
    if (lhs != rhs)
        record_mismatch(r, std::move(exponents), std::to_string(lhs), std::to_string(rhs));
}

VerifyReport verify(const IdentityEntry& entry, const Params& params, int order,
                    const Tables& tables) {
    if (order < 1) throw std::invalid_argument("verify: order must be >= 1");
    for (const auto& [key, value] : params) {
        auto it = std::find_if(entry.params.begin(), entry.params.end(),
                               [&key](const ParamRange& pr) { return pr.name == key; });
        if (it == entry.params.end())
            throw std::invalid_argument("verify: entry " + entry.id +
                                        " takes no parameter named " + key);
        if (value < it->lo || value > it->hi)
            throw std::invalid_argument("verify: parameter " + key + " out of range [" +
                                        std::to_string(it->lo) + ", " + std::to_string(it->hi) +
                                        "]");
    }
    for (const ParamRange& pr : entry.params)
        if (!params.contains(pr.name))
            throw std::invalid_argument("verify: entry " + entry.id + " needs parameter " +
                                        pr.name);
    if (tables.crank.max_n() < order)
        throw std::invalid_argument("verify: tables too small for requested order");

    VerifyReport r;
    r.id = entry.id;
    r.params = params;
    r.order = order;
    auto start = std::chrono::steady_clock::now();
    entry.run(params, order, tables, r);
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
               .count();
    return r;
}

VerifyReport verify(const std::string& id, const Params& params, int order) {
    const IdentityEntry& entry = find_entry(id);
    Tables tables(order);
    return verify(entry, params, order, tables);
}

std::vector<std::pair<std::string, Params>> default_grid() {
    std::vector<std::pair<std::string, Params>> jobs;
    for (const IdentityEntry& e : catalog()) {
        if (e.params.empty()) {
            jobs.emplace_back(e.id, Params{});
            continue;
        }
        // Single-parameter entries sweep their declared range.
        const ParamRange& pr = e.params.front();
        for (int v = pr.lo; v <= pr.hi; ++v) jobs.emplace_back(e.id, Params{{pr.name, v}});
    }
    return jobs;
}

std::vector<VerifyReport> run_jobs(const std::vector<std::pair<std::string, Params>>& jobs,
                                   int order) {
    std::vector<VerifyReport> reports;
    if (jobs.empty()) return reports;
    Tables tables(order);
    reports.reserve(jobs.size());
    for (const auto& [id, params] : jobs)
        reports.push_back(verify(find_entry(id), params, order, tables));
    return reports;
}

std::vector<VerifyReport> verify_all(int order) { return run_jobs(default_grid(), order); }

std::string VerifyReport::to_json() const {
    std::ostringstream os;
    os << "{\"id\":\"" << id << "\",\"params\":{";
    bool first = true;
    for (const auto& [key, value] : params) {
        if (!first) os << ",";
        os << "\"" << key << "\":" << value;
        first = false;
    }
    os << "},\"order\":" << order << ",\"pass\":" << (pass ? "true" : "false")
       << ",\"first_mismatch\":";
    if (first_mismatch) {
        os << "{\"exponents\":[";
        for (std::size_t i = 0; i < first_mismatch->exponents.size(); ++i) {
            if (i) os << ",";
            os << first_mismatch->exponents[i];
        }
        os << "],\"lhs\":\"" << first_mismatch->lhs << "\",\"rhs\":\"" << first_mismatch->rhs
           << "\"}";
    } else {
        os << "null";
    }
    os << ",\"ms\":" << ms << "}";
    return os.str();
}

} // namespace crankmex::identities
