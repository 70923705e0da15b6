#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace partlab {

// All counts, coefficients and sequence values are exact integers.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

// Exact binomial coefficient; zero outside the triangle.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace partlab
