#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partlab/bigint.hpp"
#include "partlab/poly.hpp"

namespace partlab {

/**
 * A rational power series numerator/denominator with denominator
 * constant term 1; its coefficient stream is computed exactly by the
 * linear recurrence the denominator induces.
 */
struct RationalSeries {
    IntPoly numerator;
    IntPoly denominator;
};

/// c_1..c_n of the formal expansion numerator/denominator. Throws when
/// the denominator constant term is not 1 (normalization error).
std::vector<BigInt> series_coeffs(const RationalSeries& series, int n);

/**
 * Catalog of the fixed-perimeter generating functions:
 *
 *   g          (x - x^3) / (1 - x - x^2)^2      total parts, odd-part partitions
 *   h          (x - x^2) / (1 - x - x^2)^2      total parts, distinct-part partitions
 *   g1, h1     x^2 / (1 - x - x^2)^2            one exceptional part value
 *   g_minus_h  (x^2 - x^3) / (1 - x - x^2)^2
 *   h_r        (z + ... + z^{r-1}) / (1 - z - ... - z^r)          needs r
 *   g_r        z ((1-z)^{r-1} - z^{r-1}) / ((1-2z)((1-z)^{r-1} - z^r)), cleared
 *              exactly of its (1-2z) factor                       needs r
 *   g_r_d      z^d / (1 - z - z^r)                                needs r and d
 *
 * Throws std::invalid_argument for unknown names or out-of-range
 * parameters, std::runtime_error if the exact cancellation for g_r
 * fails (internal consistency error).
 */
RationalSeries gf_catalog(std::string_view name, std::optional<int> r = std::nullopt,
                          std::optional<int> d = std::nullopt);

/**
 * Exact binomial-sum closed forms, name one of:
 *
 *   g          sum (M-2n) C(M-n-1, n)
 *   h          sum (j+1) C(M-j-1, j)
 *   g1         sum (k+1) C(M-k-1, k+1)
 *   index_sum  sum (M-3n-1) C(M-n-1, n)
 *
 * each over the full range where the binomial is nonzero.
 */
BigInt closed_form(std::string_view name, int m);

/// One step of the second-order recurrence with Fibonacci forcing term:
/// f(M) = f(M-1) + f(M-2) + F_{M-1} (g, g1, h1) or F_{M-2} (h).
/// prev2 = f(M-2), prev1 = f(M-1); requires M >= 2.
BigInt recurrence_step(std::string_view name, const BigInt& prev2, const BigInt& prev1, int m);

/**
 * Fibonacci convolution forms, M >= 2:
 *
 *   cfib1  F_M + sum_{k=1}^{M-1} F_k F_{M-k}        = g(M)
 *   cfib2  F_M + sum_{k=1}^{M-2} F_k F_{M-1-k}      = h(M)
 *   cfib3  sum_{k=1}^{M-1} F_k F_{M-k}              = g1(M) = h1(M)
 *   cfib4  F_{M-1} + sum_{k=1}^{M-3} F_k F_{M-2-k}  = g(M) - h(M)
 */
BigInt fib_convolution(std::string_view name, int m);

}  // namespace partlab
