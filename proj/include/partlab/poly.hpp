#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "partlab/bigint.hpp"

namespace partlab {

/**
 * Dense integer-coefficient polynomial, index = exponent. Kept in
 * canonical form: no trailing zero coefficient. The zero polynomial has
 * an empty coefficient vector and degree() == -1 (sentinel for the
 * usual "degree minus infinity").
 */
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> coeffs);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly one() { return IntPoly{1}; }
    static IntPoly monomial(BigInt coeff, int exponent);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// Coefficient of x^k; zero outside the stored range.
    const BigInt& coeff(int k) const;

    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& other) const = default;

    IntPoly pow(int exponent) const;

    /// Substitute x -> x^e (spread coefficients), e >= 1.
    IntPoly substitute_power(int e) const;

    /// Multiply by x^k.
    IntPoly shifted(int k) const;

    /// Sum of coefficients (evaluation at 1).
    BigInt eval_one() const;

    /// Exact division: quotient when remainder is zero, throws
    /// std::runtime_error otherwise (internal consistency error).
    IntPoly divide_exact(const IntPoly& divisor) const;

    /// "1 - 2x + x^3" style rendering, for diagnostics.
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/**
 * Gaussian binomial [m over j] in the variable q^base_exponent, via the
 * q-Pascal recurrence. Zero polynomial when j < 0 or j > m. The
 * coefficient of q^(base_exponent*n) counts partitions of n into at
 * most j parts, each at most m-j.
 */
IntPoly q_binomial(int m, int j, int base_exponent = 1);

/// q^M * sum_{j=0}^{M-1} [M-1 over j]_q: coefficient of q^n is t_n(M),
/// the number of partitions of n with perimeter M.
IntPoly perimeter_q_row(int m);

}  // namespace partlab
