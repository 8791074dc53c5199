#include "crankmex/enumerate.hpp"

#include <algorithm>

namespace crankmex {

namespace {

void visit_rec(int remaining, int max_part, const PartitionFilter& f,
               std::vector<int>& acc, const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition(acc));
        return;
    }
    int hi = std::min(remaining, max_part);
    for (int part = hi; part >= f.min_part; --part) {
        if (f.part_parity && part % 2 != *f.part_parity) continue;
        acc.push_back(part);
        visit_rec(remaining - part, f.distinct ? part - 1 : part, f, acc, visit);
        acc.pop_back();
    }
}

} // namespace

void for_each_partition(int n, const PartitionFilter& filter,
                        const std::function<void(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
    std::vector<int> acc;
    visit_rec(n, filter.max_part, filter, acc, visit);
}

std::vector<Partition> enumerate_partitions(int n) {
    return enumerate_partitions(n, PartitionFilter{});
}

std::vector<Partition> enumerate_partitions(int n, const PartitionFilter& filter) {
    std::vector<Partition> out;
    for_each_partition(n, filter, [&](const Partition& p) { out.push_back(p); });
    return out;
}

CrankTable::CrankTable(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw std::invalid_argument("CrankTable: max_n must be >= 0");
    counts_.resize(static_cast<std::size_t>(max_n) + 1);
    le0_even_.assign(static_cast<std::size_t>(max_n) + 1, 0);
    le0_odd_.assign(static_cast<std::size_t>(max_n) + 1, 0);
    for (int n = 0; n <= max_n; ++n) {
        auto& row = counts_[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(2 * n) + 1, 0);
        for_each_partition(n, [&](const Partition& p) {
            int c = crank(p);
            ++row[static_cast<std::size_t>(c + n)];
            if (c <= 0) {
                if (p.length() % 2 == 0)
                    le0_even_[static_cast<std::size_t>(n)] =
                        checked_add(le0_even_[static_cast<std::size_t>(n)], 1);
                else
                    le0_odd_[static_cast<std::size_t>(n)] =
                        checked_add(le0_odd_[static_cast<std::size_t>(n)], 1);
            }
        });
    }
    // The bivariate crank <= 0 series has no q^1 term: the partition (1)
    // carries its single box both as Durfee square and as the forced
    // part 1, so the standard convention assigns weight 1 to neither
    // parity class.
    if (max_n >= 1) {
        le0_even_[1] = 0;
        le0_odd_[1] = 0;
    }
}

Count CrankTable::enumerated(int m, int n) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("CrankTable: n out of range");
    if (m < -n || m > n) return 0;
    return counts_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + n)];
}

Count CrankTable::M(int m, int n) const {
    if (n == 0) return m == 0 ? 1 : 0;
    if (n == 1) {
        if (m == 1 || m == -1) return 1;
        if (m == 0) return -1;
        return 0;
    }
    return enumerated(m, n);
}

Count CrankTable::crank_count(int n, const std::function<bool(int)>& predicate) const {
    Count total = 0;
    int span = std::max(n, 1);  // the n = 1 conventions live at m = +-1
    for (int m = -span; m <= span; ++m)
        if (predicate(m)) total = checked_add(total, M(m, n));
    return total;
}

Count CrankTable::crank_ge(int n, int j) const {
    return crank_count(n, [j](int m) { return m >= j; });
}

Count CrankTable::crank_le_neg(int n, int j) const {
    return crank_count(n, [j](int m) { return m <= -j; });
}

Count CrankTable::enumerated_crank_ge(int n, int j) const {
    Count total = 0;
    for (int m = j; m <= n; ++m) total = checked_add(total, enumerated(m, n));
    return total;
}

Count CrankTable::le0_even_length(int n) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("CrankTable: n out of range");
    return le0_even_[static_cast<std::size_t>(n)];
}

Count CrankTable::le0_odd_length(int n) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("CrankTable: n out of range");
    return le0_odd_[static_cast<std::size_t>(n)];
}

MexTable::MexTable(int max_n) {
    if (max_n < 0) throw std::invalid_argument("MexTable: max_n must be >= 0");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        MexCounts& row = rows_[static_cast<std::size_t>(n)];
        for_each_partition(n, [&](const Partition& p) {
            int m = mex(p);
            if (m % 2 == 0) return;
            bool odd_len = p.length() % 2 != 0;
            row.m12 = checked_add(row.m12, 1);
            Count& split12 = odd_len ? row.m12_odd : row.m12_even;
            split12 = checked_add(split12, 1);
            if (m % 4 == 1) {
                row.m14 = checked_add(row.m14, 1);
                Count& split14 = odd_len ? row.m14_odd : row.m14_even;
                split14 = checked_add(split14, 1);
            } else {
                row.m34 = checked_add(row.m34, 1);
                Count& split34 = odd_len ? row.m34_odd : row.m34_even;
                split34 = checked_add(split34, 1);
            }
        });
    }
}

Count mex_count(int a, int b, int n, LengthParity parity) {
    if (b != 2 && b != 4) throw std::invalid_argument("mex_count: modulus must be 2 or 4");
    if (a < 0 || a >= b) throw std::invalid_argument("mex_count: residue out of range");
    if (n < 0) return 0;
    Count total = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (mex(p) % b == a && matches(parity, p)) total = checked_add(total, 1);
    });
    return total;
}

Count distinct_count(int n, LengthParity parity) {
    if (n < 0) return 0;
    Count total = 0;
    PartitionFilter f;
    f.distinct = true;
    for_each_partition(n, f, [&](const Partition& p) {
        if (matches(parity, p)) total = checked_add(total, 1);
    });
    return total;
}

Count frobenius_count(int n, const std::function<bool(const FrobeniusSymbol&)>& predicate) {
    if (n < 0) return 0;
    Count total = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (predicate(frobenius(p))) total = checked_add(total, 1);
    });
    return total;
}

} // namespace crankmex
