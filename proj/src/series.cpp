#include "partlab/series.hpp"

#include <stdexcept>

#include "partlab/fibonacci.hpp"

namespace partlab {

namespace {

const IntPoly kFibDenSquared = (IntPoly{1, -1, -1} * IntPoly{1, -1, -1});

int require_r(std::optional<int> r, std::string_view name) {
    if (!r) throw std::invalid_argument(std::string(name) + " requires parameter r");
    if (*r < 2) throw std::invalid_argument("modulus r must be >= 2, got " + std::to_string(*r));
    return *r;
}

}  // namespace

std::vector<BigInt> series_coeffs(const RationalSeries& series, int n) {
    if (n < 0) throw std::invalid_argument("coefficient count must be >= 0");
    if (series.denominator.coeff(0) != 1)
        throw std::invalid_argument("normalization error: denominator constant term must be 1, got " +
                                    series.denominator.coeff(0).str());
    const int den_degree = series.denominator.degree();
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[0] = series.numerator.coeff(0);
    for (int k = 1; k <= n; ++k) {
        BigInt value = series.numerator.coeff(k);
        for (int i = 1; i <= std::min(k, den_degree); ++i) {
            value -= series.denominator.coeff(i) * c[k - i];
        }
        c[k] = std::move(value);
    }
    return {c.begin() + 1, c.end()};
}

RationalSeries gf_catalog(std::string_view name, std::optional<int> r, std::optional<int> d) {
    if (name == "g") return {IntPoly{0, 1, 0, -1}, kFibDenSquared};
    if (name == "h") return {IntPoly{0, 1, -1}, kFibDenSquared};
    if (name == "g1" || name == "h1") return {IntPoly{0, 0, 1}, kFibDenSquared};
    if (name == "g_minus_h") return {IntPoly{0, 0, 1, -1}, kFibDenSquared};

    if (name == "h_r") {
        const int rr = require_r(r, name);
        std::vector<BigInt> num(rr);      // z + z^2 + ... + z^{r-1}
        std::vector<BigInt> den(rr + 1);  // 1 - z - z^2 - ... - z^r
        den[0] = 1;
        for (int i = 1; i <= rr; ++i) {
            if (i < rr) num[i] = 1;
            den[i] = -1;
        }
        return {IntPoly(std::move(num)), IntPoly(std::move(den))};
    }
    if (name == "g_r") {
        const int rr = require_r(r, name);
        const IntPoly one_minus_z{1, -1};
        const IntPoly lead = one_minus_z.pow(rr - 1);
        // (1-2z) divides (1-z)^{r-1} - z^{r-1}; verified by exact division.
        const IntPoly reduced = (lead - IntPoly::monomial(1, rr - 1)).divide_exact(IntPoly{1, -2});
        IntPoly den = lead - IntPoly::monomial(1, rr);
        if (den.coeff(0) != 1)
            throw std::runtime_error("internal consistency error: g_r denominator not normalized");
        return {reduced.shifted(1), std::move(den)};
    }
    if (name == "g_r_d") {
        const int rr = require_r(r, name);
        if (!d) throw std::invalid_argument("g_r_d requires parameter d");
        if (*d < 1 || *d >= rr)
            throw std::invalid_argument("residue d must satisfy 1 <= d < r, got d=" + std::to_string(*d));
        std::vector<BigInt> den(rr + 1);  // 1 - z - z^r
        den[0] = 1;
        den[1] = -1;
        den[rr] += -1;
        return {IntPoly::monomial(1, *d), IntPoly(std::move(den))};
    }
    throw std::invalid_argument("unknown generating function '" + std::string(name) + "'");
}

BigInt closed_form(std::string_view name, int m) {
    if (m < 1) throw std::invalid_argument("sequence index m must be >= 1");
    BigInt sum = 0;
    if (name == "g") {
        for (int n = 0; 2 * n <= m - 1; ++n) sum += BigInt(m - 2 * n) * binomial(m - n - 1, n);
    } else if (name == "h") {
        for (int j = 0; 2 * j <= m - 1; ++j) sum += BigInt(j + 1) * binomial(m - j - 1, j);
    } else if (name == "g1") {
        for (int k = 0; 2 * k <= m - 2; ++k) sum += BigInt(k + 1) * binomial(m - k - 1, k + 1);
    } else if (name == "index_sum") {
        for (int n = 0; 2 * n <= m - 1; ++n) sum += BigInt(m - 3 * n - 1) * binomial(m - n - 1, n);
    } else {
        throw std::invalid_argument("unknown closed form '" + std::string(name) + "'");
    }
    return sum;
}

BigInt recurrence_step(std::string_view name, const BigInt& prev2, const BigInt& prev1, int m) {
    if (m < 2) throw std::invalid_argument("recurrence_step requires m >= 2");
    int forcing_shift;
    if (name == "g" || name == "g1" || name == "h1") {
        forcing_shift = 1;  // F_{M-1}
    } else if (name == "h") {
        forcing_shift = 2;  // F_{M-2}
    } else {
        throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
    }
    return prev1 + prev2 + fibonacci(m - forcing_shift);
}

BigInt fib_convolution(std::string_view name, int m) {
    if (m < 2) throw std::invalid_argument("fib_convolution requires m >= 2");
    auto convolve = [](int hi, int total) {
        BigInt sum = 0;
        for (int k = 1; k <= hi; ++k) sum += fibonacci(k) * fibonacci(total - k);
        return sum;
    };
    if (name == "cfib1") return fibonacci(m) + convolve(m - 1, m);
    if (name == "cfib2") return fibonacci(m) + convolve(m - 2, m - 1);
    if (name == "cfib3") return convolve(m - 1, m);
    if (name == "cfib4") return fibonacci(m - 1) + convolve(m - 3, m - 2);
    throw std::invalid_argument("unknown convolution '" + std::string(name) + "'");
}

}  // namespace partlab
