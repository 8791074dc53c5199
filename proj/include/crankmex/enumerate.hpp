#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "crankmex/partition.hpp"

namespace crankmex {

/// Restrictions for partition enumeration. Defaults enumerate everything.
struct PartitionFilter {
    int max_part = std::numeric_limits<int>::max();
    int min_part = 1;
    bool distinct = false;
    std::optional<int> part_parity;  // 0 = even parts only, 1 = odd parts only
};

/// Visits every partition of n satisfying the filter exactly once, in
/// lexicographically decreasing part order. n = 0 visits the empty
/// partition (when the filter admits it, which it always does).
void for_each_partition(int n, const PartitionFilter& filter,
                        const std::function<void(const Partition&)>& visit);

inline void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    for_each_partition(n, PartitionFilter{}, visit);
}

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(int n);
std::vector<Partition> enumerate_partitions(int n, const PartitionFilter& filter);

/// Length parity selector for the refined statistics.
enum class LengthParity { any, even, odd };

inline bool matches(LengthParity lp, const Partition& p) {
    if (lp == LengthParity::any) return true;
    return (p.length() % 2 == 0) == (lp == LengthParity::even);
}

/// Crank counts per weight, by exhaustive enumeration. Index m runs over
/// [-n, n]. The table also records the length-parity split of the
/// crank <= 0 counts used by the odd-mex correspondences.
class CrankTable {
public:
    explicit CrankTable(int max_n);

    int max_n() const noexcept { return max_n_; }

    /// Raw enumeration count of partitions of n with crank m.
    Count enumerated(int m, int n) const;

    /// M(m, n): enumeration for n >= 2; for n <= 1 the standard
    /// generating-function conventions M(0,0)=M(1,1)=M(-1,1)=1,
    /// M(0,1)=-1 override the raw counts.
    Count M(int m, int n) const;

    /// Sum of M(m, n) over the m accepted by the predicate
    /// (conventions included).
    Count crank_count(int n, const std::function<bool(int)>& predicate) const;

    /// Sum of M(m, n) over m >= j (conventions included).
    Count crank_ge(int n, int j) const;
    /// Sum of M(m, n) over m <= -j (conventions included).
    Count crank_le_neg(int n, int j) const;

    /// Partitions of n with crank m, counted by enumeration alone.
    Count enumerated_crank_ge(int n, int j) const;

    /// Length-parity split of the crank <= 0 count, aligned with the
    /// bivariate generating function: n = 1 reports (0, 0) because the
    /// series assigns the lone partition of 1 to neither class.
    Count le0_even_length(int n) const;
    Count le0_odd_length(int n) const;

private:
    int max_n_;
    std::vector<std::vector<Count>> counts_;     // counts_[n][m + n]
    std::vector<Count> le0_even_, le0_odd_;
};

/// The nine refined mex statistics of one weight.
struct MexCounts {
    Count m12 = 0, m14 = 0, m34 = 0;
    Count m12_odd = 0, m12_even = 0;
    Count m14_odd = 0, m14_even = 0;
    Count m34_odd = 0, m34_even = 0;
};

class MexTable {
public:
    explicit MexTable(int max_n);
    int max_n() const noexcept { return static_cast<int>(rows_.size()) - 1; }
    const MexCounts& at(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

private:
    std::vector<MexCounts> rows_;
};

/// Number of partitions of n with mex congruent to a modulo b,
/// optionally restricted by length parity. Only b = 2 and b = 4 are
/// supported; anything else throws std::invalid_argument.
Count mex_count(int a, int b, int n, LengthParity parity = LengthParity::any);

/// Number of partitions of n into distinct parts, optionally by length
/// parity: q(n), q_odd(n), q_even(n).
Count distinct_count(int n, LengthParity parity = LengthParity::any);

/// Number of partitions of n whose Frobenius symbol satisfies the
/// predicate. Negative n counts as 0 so difference formulas index freely.
Count frobenius_count(int n, const std::function<bool(const FrobeniusSymbol&)>& predicate);

/// A named integer sequence with an explicit starting index.
struct StatTable {
    std::string name;
    int first_n = 0;
    std::vector<Count> values;

    Count at(int n) const { return values.at(static_cast<std::size_t>(n - first_n)); }
    int last_n() const { return first_n + static_cast<int>(values.size()) - 1; }
};

} // namespace crankmex
