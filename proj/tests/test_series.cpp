#include "doctest.h"

#include <random>

#include "crankmex/builders.hpp"
#include "crankmex/enumerate.hpp"

using namespace crankmex;

namespace {

Series random_sparse(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> exp_dist(0, order);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    Series s(order);
    for (int i = 0; i < 6; ++i) s.add_coeff(exp_dist(rng), Coeff(coeff_dist(rng)));
    return s;
}

} // namespace

TEST_CASE("series ring operations") {
    // (1 - q) * (1 + q + ... + q^10) telescopes to 1 at order 10.
    Series geo(10);
    for (int k = 0; k <= 10; ++k) geo.set_coeff(k, 1);
    CHECK(Series::make(10, {{0, 1}, {1, -1}}) * geo == Series::one(10));

    Series inv = Series::make(3, {{0, 1}, {1, -1}}).inverse();
    CHECK(inv == Series::make(3, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}));

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        Series a = random_sparse(rng, 14), b = random_sparse(rng, 14), c = random_sparse(rng, 14);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }

    CHECK_THROWS_AS(Series(5) + Series(6), std::invalid_argument);
    CHECK_THROWS_AS(Series::make(5, {{0, 2}}).inverse(), std::invalid_argument);
    CHECK_THROWS_AS(Series(4).inverse(), std::invalid_argument);

    Series neg = Series::make(8, {{0, -1}, {2, 3}});
    CHECK(neg * neg.inverse() == Series::one(8));
    CHECK(Series::make(4, {{0, 1}, {2, -5}}).pretty() == "1 - 5q^2");
    CHECK(Series::make(2, {{0, 1}, {1, -1}}).to_json() == "[\"1\",\"-1\",\"0\"]");
}

TEST_CASE("pochhammer products") {
    CHECK(pochhammer(1, 1, 2, 5) ==
          Series::make(5, {{0, 1}, {1, -1}, {2, -1}, {3, 1}}));

    // Euler product against the pentagonal series, two independent routes.
    Series euler12 = pochhammer(1, 1, kInfinite, 12);
    CHECK(euler12 == Series::make(12, {{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}}));
    CHECK(euler12 == pentagonal_series(12));
    CHECK(pochhammer(1, 1, kInfinite, 60) == pentagonal_series(60));

    CHECK(pochhammer(2, 2, kInfinite, 6, FactorSign::plus) ==
          Series::make(6, {{0, 1}, {2, 1}, {4, 1}, {6, 2}}));

    CHECK(pochhammer(1, 1, 0, 4) == Series::one(4));
    CHECK_THROWS_AS(pochhammer(0, 1, 3, 8), std::invalid_argument);
    CHECK_THROWS_AS(pochhammer(0, 1, kInfinite, 8, FactorSign::plus), std::invalid_argument);
    CHECK_THROWS_AS(pochhammer(1, 0, 2, 8), std::invalid_argument);

    Series inf = pochhammer(1, 1, kInfinite, 24);
    CHECK(inf * inf.inverse() == Series::one(24));
}

TEST_CASE("pentagonal series support") {
    Series s = pentagonal_series(60);
    std::set<int> support;
    for (long long k = 1;; ++k) {
        long long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 > 60 && g2 > 60) break;
        if (g1 <= 60) support.insert(static_cast<int>(g1));
        if (g2 <= 60) support.insert(static_cast<int>(g2));
    }
    support.insert(0);
    for (int k = 0; k <= 60; ++k) {
        const Coeff& c = s.coeff(k);
        CHECK(c >= -1);
        CHECK(c <= 1);
        CHECK((c != 0) == support.contains(k));
    }
}

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(4, 2, 4) ==
          Series::make(4, {{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(gaussian_binomial(7, 0, 5) == Series::one(5));
    CHECK_THROWS_AS(gaussian_binomial(4, 5, 10), std::invalid_argument);

    for (int n = 0; n <= 8; ++n)
        for (int d = 0; d <= n; ++d) {
            int degree = d * (n - d);
            Series g = gaussian_binomial(n, d, degree + 3);
            CHECK(g == gaussian_binomial(n, n - d, degree + 3));
            for (int k = 0; k <= degree; ++k) CHECK(g.coeff(k) >= 0);
            if (degree + 1 <= g.order())
                for (int k = degree + 1; k <= g.order(); ++k) CHECK(g.coeff(k) == 0);
            CHECK(g.coeff(degree) == 1);
        }
}

TEST_CASE("bilateral and unilateral sums") {
    CHECK(bilateral_sum(10, [](long long k) { return k * (2 * k + 1); },
                        [](long long) { return 1; }) ==
          Series::make(10, {{0, 1}, {1, 1}, {3, 1}, {6, 1}, {10, 1}}));
    CHECK_THROWS_AS(bilateral_sum(10, [](long long) { return 0LL; },
                                  [](long long) { return 1; }),
                    std::invalid_argument);
    // Triangular exponents with the (-q)^T(k) sign pattern.
    Series ewell_sum = unilateral_sum(10, [](long long k) { return k * (k + 1) / 2; },
                                      [](long long k) {
                                          return (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
                                      });
    CHECK(ewell_sum == Series::make(10, {{0, 1}, {1, -1}, {3, -1}, {6, 1}, {10, 1}}));
}

TEST_CASE("crank generating function") {
    const int N = 25;
    ZSeries gf = crank_gf_bivariate(N);
    CHECK(gf.coeff(0, 0) == 1);
    CHECK(gf.coeff(0, 1) == -1);
    CHECK(gf.coeff(1, 1) == 1);
    CHECK(gf.coeff(-1, 1) == 1);
    CHECK(gf.z_symmetric());

    CrankTable t(N);
    for (int n = 0; n <= N; ++n)
        for (int m = -N; m <= N; ++m) CHECK(gf.coeff(m, n) == t.M(m, n));

    // z-exponents never outrun the q-exponent.
    for (int n = 0; n <= N; ++n)
        for (int m = -N; m <= N; ++m)
            if (std::abs(m) > n) CHECK(gf.coeff(m, n) == 0);
}

TEST_CASE("crank le0 generating function") {
    const int N = 20;
    ZSeries gf = crank_le0_bivariate(N);
    CHECK(gf.coeff(0, 0) == 1);
    CHECK(gf.coeff(2, 2) == 1);
    for (int m = -N; m <= N; ++m) CHECK(gf.coeff(m, 1) == 0);

    Series collapsed = gf.collapse_z(-1);
    Series expected(N);
    for (int n = 0;; ++n) {
        long long e = static_cast<long long>(n) * (n + 1);
        if (e > N) break;
        expected += Series::monomial(N, static_cast<int>(e)) * pochhammer(2, 2, n, N).inverse();
    }
    CHECK(collapsed == expected);
}

TEST_CASE("zseries json is sorted by (n, m)") {
    ZSeries s(2);
    s.add_coeff(1, 1, 2);
    s.add_coeff(-1, 1, 3);
    s.add_coeff(0, 0, 1);
    CHECK(s.to_json() ==
          "[{\"z\":0,\"q\":0,\"c\":\"1\"},{\"z\":-1,\"q\":1,\"c\":\"3\"},"
          "{\"z\":1,\"q\":1,\"c\":\"2\"}]");
}

TEST_CASE("theta-product identity") {
    const int D = 30;
    XYSeries lhs = carlitz_product(D);
    XYSeries rhs = carlitz_theta(D);
    CHECK(lhs.coeff(0, 0) == 1);
    CHECK(rhs.coeff(0, 0) == 1);
    CHECK(lhs.coeff(1, 0) == 1);
    CHECK(rhs.coeff(1, 0) == 1);
    CHECK(lhs == rhs);

    // x = q^3, y = q collapses the theta side to the bilateral k(2k+1) sum.
    Series sub = carlitz_theta(20).substitute(3, 1, 20);
    CHECK(sub == bilateral_sum(20, [](long long k) { return k * (2 * k + 1); },
                               [](long long) { return 1; }));
}

TEST_CASE("fine chain at general monomial parameters") {
    for (auto [alpha, beta] : {std::pair{1, 0}, {1, 2}, {2, 1}, {3, 2}}) {
        Series lhs = fine_lhs(alpha, beta, 24);
        CHECK(lhs == fine_mid(alpha, beta, 24));
        CHECK(lhs == fine_rhs(alpha, beta, 24));
    }
    CHECK_THROWS_AS(fine_lhs(0, 0, 10), std::invalid_argument);
}
