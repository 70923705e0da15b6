#include "partlab/fibonacci.hpp"

#include <stdexcept>
#include <utility>

namespace partlab {

BigInt fibonacci(int m) {
    if (m < -1) throw std::domain_error("fibonacci is defined for m >= -1");
    BigInt prev = 1;  // F(-1)
    BigInt curr = 0;  // F(0)
    for (int i = 0; i < m; ++i) {
        prev += curr;
        std::swap(prev, curr);
    }
    return m == -1 ? prev : curr;
}

}  // namespace partlab
