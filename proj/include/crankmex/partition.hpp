#pragma once

#include <string>
#include <vector>

#include "crankmex/common.hpp"

namespace crankmex {

/// An integer partition: a weakly decreasing list of positive parts.
/// The empty partition (weight 0) is a valid value. Instances are
/// immutable after construction and cheap to copy or share.
class Partition {
public:
    Partition() = default;

    /// Validates that `parts` is weakly decreasing with every part >= 1.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int part(std::size_t i) const { return parts_.at(i); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    long long weight() const noexcept;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Two strictly decreasing rows of nonnegative integers of equal length.
/// Row i of `top` counts boxes right of diagonal cell i in the Ferrers
/// diagram; `bottom` counts boxes below it.
struct FrobeniusSymbol {
    std::vector<int> top;
    std::vector<int> bottom;

    int columns() const noexcept { return static_cast<int>(top.size()); }
    long long weight() const noexcept;
    bool operator==(const FrobeniusSymbol&) const = default;
};

/// Parses "5,4,4,2,2"; the empty string is the empty partition.
/// Throws std::invalid_argument on syntax errors, parts < 1, or input
/// that is not weakly decreasing.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

/// Parses "t1,t2,...|b1,b2,..."; "|" alone is the empty symbol.
FrobeniusSymbol parse_frobenius(const std::string& text);
std::string format_frobenius(const FrobeniusSymbol& f);

/// Transpose of the Ferrers diagram.
Partition conjugate(const Partition& p);

/// Number of parts equal to 1.
int omega(const Partition& p);

/// Number of parts strictly greater than omega(p).
int mu(const Partition& p);

/// Dyson's crank: the largest part when no part equals 1, otherwise
/// mu - omega. By convention crank of the empty partition is 0, which
/// keeps the n = 0 coefficient of the crank generating function equal
/// to the count of partitions of 0 with crank 0.
int crank(const Partition& p);

/// Minimal excludant: the least positive integer that is not a part.
int mex(const Partition& p);

FrobeniusSymbol frobenius(const Partition& p);

/// Inverse of frobenius(). Throws std::invalid_argument if the rows are
/// not strictly decreasing nonnegative sequences of equal length.
Partition from_frobenius(const FrobeniusSymbol& f);

/// The largest d >= 0 such that a d x (d+j) rectangle fits in the
/// Ferrers diagram, i.e. part d is at least d + j. j = 0 gives the
/// Durfee square side.
int durfee_rect(const Partition& p, int j);

// Frobenius-symbol predicates used by the crank bijections.
bool symbol_has_no_zero(const FrobeniusSymbol& f);
bool symbol_top_row_lacks(const FrobeniusSymbol& f, int j);

/// True when the first two bottom-row entries differ by exactly 1.
/// Single-column symbols qualify exactly when the lone bottom entry is 1
/// and the empty symbol always qualifies; together with
/// symbol_has_no_zero this carves out precisely the image of the
/// crank-0 map at every weight.
bool symbol_bottom_first_two_differ_by_one(const FrobeniusSymbol& f);

} // namespace crankmex
