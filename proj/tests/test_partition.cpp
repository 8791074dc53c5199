#include "doctest.h"

#include <set>

#include "crankmex/enumerate.hpp"
#include "crankmex/partition.hpp"

using namespace crankmex;

namespace {

// Independent oracle for p(n): Euler's pentagonal recurrence.
Count partition_number(int n) {
    static std::vector<Count> memo{1};
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        Count total = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            Count term = 0;
            if (g1 <= m) term = checked_add(term, memo[static_cast<std::size_t>(m - g1)]);
            if (g2 <= m) term = checked_add(term, memo[static_cast<std::size_t>(m - g2)]);
            total = checked_add(total, k % 2 == 1 ? term : -term);
        }
        memo.push_back(total);
    }
    return memo[static_cast<std::size_t>(n)];
}

} // namespace

TEST_CASE("parse_partition accepts weakly decreasing lists") {
    CHECK(parse_partition("5,4,4,2,2") == Partition({5, 4, 4, 2, 2}));
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition(" 3 , 2 ,1") == Partition({3, 2, 1}));
    CHECK_THROWS_AS(parse_partition("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2,-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
    CHECK(format_partition(parse_partition("5,4,4,2,2")) == "5,4,4,2,2");
}

TEST_CASE("enumerate_partitions counts p(n) and orders lexicographically") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());

    auto four = enumerate_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == Partition({4}));
    CHECK(four[1] == Partition({3, 1}));
    CHECK(four[2] == Partition({2, 2}));
    CHECK(four[3] == Partition({2, 1, 1}));
    CHECK(four[4] == Partition({1, 1, 1, 1}));

    CHECK(enumerate_partitions(10).size() == 42);
    for (int n = 0; n <= 24; ++n) {
        Count c = 0;
        std::set<Partition> seen;
        for_each_partition(n, [&](const Partition& p) {
            ++c;
            CHECK(p.weight() == n);
            CHECK(seen.insert(p).second);
        });
        CHECK(c == partition_number(n));
    }
}

TEST_CASE("conjugate transposes the Ferrers diagram") {
    CHECK(conjugate(Partition({5, 4, 4, 2, 2})) == Partition({5, 5, 3, 3, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition({6})) == Partition({1, 1, 1, 1, 1, 1}));
    for (int n = 0; n <= 18; ++n)
        for_each_partition(n, [&](const Partition& p) {
            Partition c = conjugate(p);
            CHECK(c.weight() == n);
            CHECK(conjugate(c) == p);
        });
}

TEST_CASE("crank statistics") {
    CHECK(omega(Partition({5, 4, 2, 2, 1, 1})) == 2);
    CHECK(omega(Partition({5, 4, 4, 2, 2})) == 0);
    CHECK(omega(Partition{}) == 0);

    CHECK(mu(Partition({5, 4, 2, 2, 1, 1})) == 2);
    CHECK(mu(Partition({1, 1, 1})) == 0);
    CHECK(mu(Partition({3, 1})) == 1);

    CHECK(crank(Partition({5, 4, 4, 2, 2})) == 5);
    CHECK(crank(Partition({5, 4, 2, 2, 1, 1})) == 0);
    CHECK(crank(Partition({1})) == -1);
    CHECK(crank(Partition{}) == 0);

    for (int n = 1; n <= 16; ++n)
        for_each_partition(n, [&](const Partition& p) {
            int c = crank(p);
            CHECK(c >= -n);
            CHECK(c <= n);
        });
}

TEST_CASE("mex") {
    CHECK(mex(Partition({5, 4, 4, 2, 2})) == 1);
    CHECK(mex(Partition({5, 4, 2, 1, 1})) == 3);
    CHECK(mex(Partition({4, 3, 2, 1})) == 5);
    CHECK(mex(Partition{}) == 1);
    for (int n = 0; n <= 16; ++n)
        for_each_partition(n, [&](const Partition& p) { CHECK(mex(p) <= n + 1); });
}

TEST_CASE("frobenius symbol round-trips") {
    FrobeniusSymbol f = frobenius(Partition({5, 4, 4, 2, 2}));
    CHECK(f.top == std::vector<int>{4, 2, 1});
    CHECK(f.bottom == std::vector<int>{4, 3, 0});

    CHECK(frobenius(Partition{}).columns() == 0);
    FrobeniusSymbol one = frobenius(Partition({1}));
    CHECK(one.top == std::vector<int>{0});
    CHECK(one.bottom == std::vector<int>{0});

    CHECK(format_frobenius(f) == "4,2,1|4,3,0");
    CHECK(parse_frobenius("4,2,1|4,3,0") == f);
    CHECK(parse_frobenius("|") == FrobeniusSymbol{});
    CHECK_THROWS_AS(parse_frobenius("2,2|1,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_frobenius("2,1|0"), std::invalid_argument);
    CHECK_THROWS_AS(from_frobenius(FrobeniusSymbol{{1, 1}, {1, 0}}), std::invalid_argument);

    for (int n = 0; n <= 18; ++n)
        for_each_partition(n, [&](const Partition& p) {
            FrobeniusSymbol sym = frobenius(p);
            CHECK(sym.weight() == n);
            CHECK(from_frobenius(sym) == p);
        });
}

TEST_CASE("durfee rectangles") {
    Partition p({5, 4, 4, 2, 2});
    CHECK(durfee_rect(p, 0) == 3);
    CHECK(durfee_rect(p, 1) == 3);
    CHECK(durfee_rect(p, 2) == 2);
    CHECK(durfee_rect(p, 3) == 1);
    CHECK(durfee_rect(p, 4) == 1);
    CHECK(durfee_rect(Partition{}, 0) == 0);
    CHECK(durfee_rect(Partition{}, 3) == 0);
    for (int n = 0; n <= 18; ++n)
        for_each_partition(n, [&](const Partition& q) {
            for (int j = 0; j < 6; ++j)
                CHECK(durfee_rect(q, j + 1) <= durfee_rect(q, j));
        });
}

TEST_CASE("crank table and conventions") {
    CrankTable t(30);
    CHECK(t.M(0, 0) == 1);
    CHECK(t.M(0, 1) == -1);
    CHECK(t.M(1, 1) == 1);
    CHECK(t.M(-1, 1) == 1);
    CHECK(t.M(2, 1) == 0);
    CHECK(t.M(0, 4) == 1);
    CHECK(t.M(5, 5) == 1);

    // Without the overrides, enumeration sees only the lone partition (1).
    CHECK(t.enumerated(-1, 1) == 1);
    CHECK(t.enumerated(0, 1) == 0);
    CHECK(t.enumerated(1, 1) == 0);

    for (int n = 0; n <= 30; ++n) {
        Count total = 0;
        for (int m = -n; m <= n; ++m) {
            total += t.M(m, n);
            CHECK(t.M(m, n) == t.M(-m, n));
        }
        Count pn = 0;
        for_each_partition(n, [&](const Partition&) { ++pn; });
        CHECK(total == pn);
    }
}

TEST_CASE("mex counts reproduce the summary-table values") {
    CHECK(mex_count(1, 2, 10) == 23);
    CHECK(mex_count(1, 4, 8) == 7);
    CHECK(mex_count(3, 4, 15, LengthParity::even) == 24);
    CHECK(mex_count(1, 2, 0) == 1);  // empty partition has mex 1
    CHECK(mex_count(1, 2, 1) == 0);  // the partition (1) has mex 2
    CHECK_THROWS_AS(mex_count(1, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(mex_count(4, 4, 5), std::invalid_argument);

    MexTable table(15);
    CHECK(table.at(10).m12 == 23);
    CHECK(table.at(14).m14_even == 20);
    CHECK(table.at(12).m34_odd == 10);
    for (int n = 0; n <= 15; ++n) {
        const MexCounts& c = table.at(n);
        CHECK(c.m12 == c.m14 + c.m34);
        CHECK(c.m12 == c.m12_odd + c.m12_even);
        CHECK(c.m14 == c.m14_odd + c.m14_even);
        CHECK(c.m34 == c.m34_odd + c.m34_even);
        CHECK(c.m12_odd == c.m14_odd + c.m34_odd);
        CHECK(c.m12_even == c.m14_even + c.m34_even);
    }
}

TEST_CASE("distinct-part counts") {
    CHECK(distinct_count(5) == 3);
    CHECK(distinct_count(5, LengthParity::odd) == 1);
    CHECK(distinct_count(0) == 1);
    CHECK(distinct_count(0, LengthParity::even) == 1);
}

TEST_CASE("frobenius predicates and counts") {
    CHECK(symbol_has_no_zero(frobenius(Partition{})));
    CHECK(frobenius_count(2, symbol_has_no_zero) == 0);
    CHECK(frobenius_count(3, symbol_has_no_zero) == 1);   // (2,1) has symbol 1|1
    CHECK(frobenius_count(4, symbol_has_no_zero) == 2);   // (3,1) -> 2|1 and (2,1,1) -> 1|2
    CHECK(frobenius_count(-1, symbol_has_no_zero) == 0);

    auto no_zero_in_top = [](const FrobeniusSymbol& f) { return symbol_top_row_lacks(f, 0); };
    CHECK(frobenius_count(4, no_zero_in_top) == 3);  // (4), (3,1), (2,1,1)
    CHECK(frobenius_count(0, no_zero_in_top) == 1);

    // a(n) - a(n-1) = M(0,n) with the n <= 1 conventions.
    CrankTable t(12);
    Count prev = 0;
    for (int n = 0; n <= 12; ++n) {
        Count a = frobenius_count(n, symbol_has_no_zero);
        CHECK(a - prev == t.M(0, n));
        prev = a;
    }

    // The no-zero, bottom-step-one predicate carves out the crank-0 count.
    for (int n = 0; n <= 12; ++n) {
        Count c = frobenius_count(n, [](const FrobeniusSymbol& f) {
            return symbol_has_no_zero(f) && symbol_bottom_first_two_differ_by_one(f);
        });
        CHECK(c == t.enumerated(0, n));
    }
}

TEST_CASE("crank_ge matches odd mex counts") {
    CrankTable t(24);
    MexTable m(24);
    for (int n = 2; n <= 24; ++n) CHECK(t.enumerated_crank_ge(n, 0) == m.at(n).m12);
    // With conventions the identity extends to n = 0 and 1.
    for (int n = 0; n <= 24; ++n) CHECK(t.crank_ge(n, 0) == m.at(n).m12);
}

TEST_CASE("crank_count with an arbitrary predicate") {
    CrankTable t(12);
    CHECK(t.crank_count(4, [](int m) { return m == 0; }) == 1);
    CHECK(t.crank_count(1, [](int m) { return m >= 0; }) == 0);  // -1 + 1
    for (int n = 0; n <= 12; ++n) {
        CHECK(t.crank_count(n, [](int m) { return m % 2 == 0; }) +
                  t.crank_count(n, [](int m) { return m % 2 != 0; }) ==
              t.crank_count(n, [](int) { return true; }));
        CHECK(t.crank_ge(n, 0) + t.crank_le_neg(n, 1) ==
              t.crank_count(n, [](int) { return true; }));
    }
}
