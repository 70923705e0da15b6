#pragma once

#include <map>
#include <optional>
#include <utility>

#include "partlab/bigint.hpp"
#include "partlab/partition.hpp"

namespace partlab {

/**
 * Per-perimeter statistics accumulated in one exhaustive pass over all
 * 2^(M-1) profile words:
 *
 *   g          total parts over odd-part partitions
 *   h          total parts over distinct-part partitions
 *   g1         partitions with exactly one even part value (any
 *              multiplicity), all other parts odd
 *   h1         partitions with exactly one part value of multiplicity
 *              >= 2, all others multiplicity 1
 *   index_sum  sum of m2_index over odd-part partitions
 *   g1_no_one  g1 members with no part equal to 1
 *   t_row      partitions-by-size row: t_row[n] = t_n(M)
 */
struct PerimeterTable {
    int m = 0;
    BigInt g, h, g1, h1;
    BigInt index_sum;
    BigInt g1_no_one;
    std::map<long long, BigInt> t_row;
};

/// (|O(n;r,j)|, |D(n;r,j)|): partitions of n with exactly j part values
/// divisible by r, resp. exactly j part values of multiplicity >= r.
std::pair<BigInt, BigInt> franklin_counts(long long n, int r, int j);

/// (alpha, beta) refinement at j = 1: the unique divisible part value is
/// repeated exactly u times, resp. the unique repeated value equals u.
std::pair<BigInt, BigInt> refined_counts(long long n, int r, int u);

struct BeckTotals {
    BigInt a;    // total parts over odd-part partitions of n
    BigInt b;    // total parts over distinct-part partitions of n
    BigInt o21;  // |O(n;2,1)|
    BigInt d21;  // |D(n;2,1)|
};
BeckTotals beck_totals(long long n);

/// Exhaustive pass over perimeter-M partitions. With threads > 1 the
/// word space is split into disjoint ranges; the merged result is
/// identical to the sequential pass.
PerimeterTable perimeter_table(int m, int threads = 1);

struct RegularPerimeterCounts {
    BigInt g_r;                  // no part divisible by r
    BigInt h_r;                  // every multiplicity below r
    std::optional<BigInt> g_r_d; // all parts congruent to d mod r, when d given
};
RegularPerimeterCounts regular_perimeter_counts(int m, int r, std::optional<int> d = std::nullopt);

}  // namespace partlab
