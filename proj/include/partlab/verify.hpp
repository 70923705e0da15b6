#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partlab/bigint.hpp"

namespace partlab {

/// First failing grid point of a check, with both computed values.
struct Counterexample {
    std::string params;
    std::string lhs;
    std::string rhs;
};

/**
 * Machine-readable outcome of an identity check over a parameter grid.
 * Checks do not stop at the first failure: they record the first
 * counterexample and keep counting, so a systematic bug surfaces as a
 * failure count, not a single data point.
 */
struct VerificationReport {
    std::string check;
    std::string grid;
    long long witnesses = 0;
    long long failures = 0;
    std::optional<Counterexample> first_counterexample;
    double elapsed_seconds = 0.0;

    bool pass() const { return failures == 0; }
};

/// |O(n;r,j)| = |D(n;r,j)| over the grid, plus sum_j |O(n;r,j)| = p(n).
VerificationReport verify_franklin(int n_max, const std::vector<int>& r_set, int j_max);

/// alpha/beta equality for every u, plus an executable-bijection check:
/// refined_franklin is injective, class-correct and inverted by
/// refined_franklin_inv on every enumerated domain element.
VerificationReport verify_theorem1(int n_max, const std::vector<int>& r_set);

/// a(n) - b(n) = |O(n;2,1)| = |D(n;2,1)| for all n <= n_max.
VerificationReport verify_beck(int n_max);

/**
 * Fixed-perimeter identities. For M <= m_max_enum the exhaustive
 * enumeration pass is compared name-by-name against series
 * coefficients, closed forms, recurrences and Fibonacci convolutions,
 * and the structural identities (index sum, no-one count, Fibonacci
 * cardinalities, fu_tang bijectivity) are checked. For M <= m_max_series
 * the four formula routes are compared without enumeration.
 */
VerificationReport verify_perimeter(int m_max_enum, int m_max_series, int threads = 1);

/**
 * Margin scan for the fixed-perimeter Glaisher inequality: margins[M-1]
 * = h_r(M) - g_r(M) computed by series recurrences and cross-checked
 * against exhaustive enumeration for M <= cross_check_max. A
 * series/enumeration mismatch throws (internal consistency error);
 * inequality violations are data, recorded in first_violation.
 */
struct ConjectureScan {
    int r = 0;
    int m_max = 0;
    std::vector<BigInt> g_values;          // g_r(1..m_max)
    std::vector<BigInt> h_values;          // h_r(1..m_max)
    std::vector<BigInt> margins;           // h_r(M) - g_r(M)
    std::optional<int> first_violation;    // smallest M with margin < 0
    std::optional<int> first_strict_gap;   // smallest M with margin > 0
};

ConjectureScan conjecture_scan(int r, int m_max, int cross_check_max = 16);

}  // namespace partlab
