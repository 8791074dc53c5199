#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "crankmex/enumerate.hpp"
#include "crankmex/partition.hpp"

namespace crankmex::bijections {

/// A signed triple (pi; kappa; nu): pi has distinct parts, kappa is
/// nonempty with largest part (the peak) at least j, and every part of
/// nu is at most peak - j. The sign is (-1)^(length of pi).
struct TripleTj {
    int j = 0;
    Partition pi, kappa, nu;

    TripleTj() = default;
    TripleTj(int j, Partition pi, Partition kappa, Partition nu);

    int peak() const { return kappa.part(0); }
    long long weight() const { return pi.weight() + kappa.weight() + nu.weight(); }
    int sign() const { return pi.length() % 2 == 0 ? 1 : -1; }

    bool operator==(const TripleTj&) const = default;
    auto operator<=>(const TripleTj&) const = default;
};

std::string format_triple(const TripleTj& t);

/// All triples of the given total weight, in a fixed canonical order.
std::vector<TripleTj> enumerate_Tj(int j, int weight);

/// First cancellation: move the smallest part of pi into kappa when it
/// is at most the smallest part of kappa, else move the smallest
/// non-peak part of kappa into pi when it is smaller than every part of
/// pi. Fixed exactly when kappa is the bare peak and all parts of pi
/// exceed it. Weight-preserving, sign-reversing involution.
TripleTj first_cancellation(const TripleTj& t);
bool first_cancellation_fixed(const TripleTj& t);

/// Collapse of a first-cancellation fixed point: subtract j from the
/// peak and j+1, j+2, ... from the successive smallest parts of pi; the
/// leftovers merge with nu into one ordinary partition. The number of
/// reduced pi parts is returned so the move can be undone.
struct PeakReduction {
    Partition merged;
    int staircase_steps = 0;  // number of pi parts consumed
};
PeakReduction peak_reduction(const TripleTj& fixed_point);
TripleTj peak_reduction_inverse(const Partition& merged, int staircase_steps, int j);

/// Staircase removed by peak_reduction: j, j+1, ..., j+steps with zero
/// entries dropped.
std::vector<int> peak_reduction_staircase(int j, int staircase_steps);

/// Rearranged triple for the second cancellation. kappa gains a
/// j-Durfee rectangle with the part d+j right below it (empty kappa
/// encodes d = 0 when j = 0), nu is unrestricted, pi is untouched.
struct AdjustedTriple {
    int j = 0;
    Partition pi, kappa, nu;

    long long weight() const { return pi.weight() + kappa.weight() + nu.weight(); }
    int sign() const { return pi.length() % 2 == 0 ? 1 : -1; }
    bool operator==(const AdjustedTriple&) const = default;
    auto operator<=>(const AdjustedTriple&) const = default;
};

bool is_valid_adjusted(const AdjustedTriple& t);
AdjustedTriple second_cancellation_adjust(const TripleTj& t);
TripleTj second_cancellation_adjust_inverse(const AdjustedTriple& t);

/// Second cancellation on adjusted triples: compare the smallest part
/// of pi with the smallest part of nu; x <= y moves x into nu, x > y
/// moves y into pi. Fixed points are exactly (empty; kappa; empty).
AdjustedTriple second_cancellation(const AdjustedTriple& t);
bool second_cancellation_fixed(const AdjustedTriple& t);

/// The box/interval factorization of partitions into at most d parts:
/// split sends p to (high, low) with high made of parts in
/// [n-d+1, n] and low fitting the d x (n-d) box; merge is its inverse.
/// Merge inserts each high part h = n+1-r, smallest first, by adding h
/// to row r and resorting.
std::pair<Partition, Partition> kth_excess_split(const Partition& p, int n, int d);
Partition kth_excess_merge(const Partition& high, const Partition& low, int n, int d);

/// Franklin's pentagonal involution on partitions with distinct parts.
Partition franklin(const Partition& p);
bool franklin_fixed(const Partition& p);

/// Triples for the odd/even length cancellation: pi has distinct even
/// parts, mu has odd parts, nu has distinct odd parts; the sign is
/// (-1)^(len(pi) + len(mu)).
struct Cor36Triple {
    Partition pi, mu, nu;

    long long weight() const { return pi.weight() + mu.weight() + nu.weight(); }
    int sign() const { return (pi.length() + mu.length()) % 2 == 0 ? 1 : -1; }
    bool operator==(const Cor36Triple&) const = default;
    auto operator<=>(const Cor36Triple&) const = default;
};

std::vector<Cor36Triple> enumerate_cor36(int weight);
Cor36Triple cor36_involution(const Cor36Triple& t);
bool cor36_fixed(const Cor36Triple& t);

/// Decomposition behind the crank <= 0 sign-reversing involution:
/// Durfee square of side d, d parts 1 set aside, pi the remaining parts
/// below the square, nu the columns right of the square. The partition
/// (1) alone does not decompose (its single box is both the square and
/// the forced 1) and is excluded from the involution's domain.
struct Cor38Parts {
    int d = 0;
    Partition pi, nu;
};
bool in_cor38_domain(const Partition& p);
Cor38Parts cor38_decompose(const Partition& p);
Partition cor38_reassemble(const Cor38Parts& parts);

/// Move one copy of the smallest odd-multiplicity part of pi to nu, or
/// the smallest part of nu to pi, whichever is smaller; fixed when pi
/// has only even multiplicities and nu is empty.
Partition cor38_involution(const Partition& p);
bool cor38_fixed(const Partition& p);

/// Sends a fixed point to a partition with distinct even parts: the
/// Durfee square plus d ones regroup into rows 2d, 2d-2, ..., 2 and the
/// conjugate of pi is added row-wise.
Partition cor38_fixedpoint_map(const Partition& fixed_point);

/// Crank-0 partitions to partitions whose Frobenius symbol has no zero
/// and whose first two bottom-row entries differ by one: delete the d
/// parts 1 (d = omega = Durfee side) and insert a row of length d.
Partition crank0_map(const Partition& p);

/// True when p has crank <= -j and the j-Durfee rectangle plus d+j
/// parts 1 sit disjointly inside p (everything except the partition (1)
/// at j = 0).
bool in_crank_le_neg_j_domain(const Partition& p, int j);

/// Deletes d+j parts 1 and raises the d largest parts by one, mapping
/// weight n to weight n-j; the image is exactly the set of partitions
/// of n-j with no j in the top row of the Frobenius symbol.
Partition crank_le_neg_j_map(const Partition& p, int j);

/// Exhaustive verification record for one map.
struct MapReport {
    std::string name;
    long long domain_size = 0;
    bool involution_ok = true;
    bool weight_ok = true;
    bool sign_ok = true;
    bool fixed_point_ok = true;
    std::vector<std::string> fixed_points;
    std::vector<std::pair<std::string, bool>> named_checks;
    long long ms = 0;

    bool all_ok() const;
    std::string to_json() const;
};

/// Checks that `map` is a weight-preserving sign-reversing involution on
/// `domain` whose fixed points are exactly those satisfying
/// `expect_fixed`.
template <typename T>
MapReport check_involution(const std::string& name, const std::vector<T>& domain,
                           const std::function<T(const T&)>& map,
                           const std::function<int(const T&)>& sign,
                           const std::function<bool(const T&)>& expect_fixed,
                           const std::function<long long(const T&)>& weight,
                           const std::function<std::string(const T&)>& show) {
    MapReport r;
    r.name = name;
    r.domain_size = static_cast<long long>(domain.size());
    for (const T& x : domain) {
        T y = map(x);
        bool fixed = (y == x);
        if (map(y) != x) r.involution_ok = false;
        if (weight(y) != weight(x)) r.weight_ok = false;
        if (!fixed && sign(y) != -sign(x)) r.sign_ok = false;
        if (fixed != expect_fixed(x)) r.fixed_point_ok = false;
        if (fixed) r.fixed_points.push_back(show(x));
    }
    return r;
}

/// Aggregated involution reports for the named map over a weight range,
/// with the map-specific fixed-point oracles included as named checks.
MapReport check_named_involution(const std::string& name, int max_weight, int j = 0);

/// Injectivity plus exact-image verification for the two Frobenius-side
/// maps. `name` is "crank0" or "crank_le_neg_j".
MapReport check_named_bijection(const std::string& name, int max_n, int j = 0);

const std::vector<std::string>& involution_names();
const std::vector<std::string>& bijection_names();

} // namespace crankmex::bijections
