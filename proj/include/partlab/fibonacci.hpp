#pragma once

#include "partlab/bigint.hpp"

namespace partlab {

/// Fibonacci numbers with the convention F(-1) = 1, F(0) = 0, F(1) = 1.
/// Throws std::domain_error for m < -1.
BigInt fibonacci(int m);

}  // namespace partlab
