#pragma once

#include <optional>
#include <string>

#include "partlab/partition.hpp"

namespace partlab {

/**
 * A conjunction of partition-class predicates. Build one by chaining
 * setters, e.g.
 *
 *     ConstraintSpec{}.odd().perimeter_equals(5)
 *
 * matches partitions with all parts odd and perimeter 5. Parameters are
 * validated eagerly: r >= 2, 1 <= d < r, j >= 0, u >= 1, M >= 1, n >= 0.
 */
class ConstraintSpec {
public:
    ConstraintSpec() = default;

    ConstraintSpec& odd();
    ConstraintSpec& distinct();

    /// No part divisible by r (r-regular).
    ConstraintSpec& regular(int r);

    /// Every part value occurs fewer than r times.
    ConstraintSpec& multiplicity_below(int r);

    /// Exactly j part values divisible by r; when u is given, each such
    /// value must be repeated exactly u times.
    ConstraintSpec& exactly_divisible(int r, int j, std::optional<int> u = std::nullopt);

    /// Exactly j part values with multiplicity >= r; when u is given,
    /// each such value must equal u.
    ConstraintSpec& exactly_repeated(int r, int j, std::optional<int> u = std::nullopt);

    /// All parts congruent to d modulo r.
    ConstraintSpec& congruent_to(int d, int r);

    ConstraintSpec& perimeter_equals(int m);
    ConstraintSpec& size_equals(long long n);
    ConstraintSpec& no_ones();

    bool matches(const Partition& p) const;

    /// Human-readable conjunction, e.g. "odd,perimeter=5"; "all" when empty.
    std::string describe() const;

private:
    bool odd_ = false;
    bool distinct_ = false;
    std::optional<int> regular_;
    std::optional<int> mult_below_;
    struct ClassCount {
        int r;
        int j;
        std::optional<int> u;
    };
    std::optional<ClassCount> divisible_;
    std::optional<ClassCount> repeated_;
    std::optional<std::pair<int, int>> congruent_;  // (d, r)
    std::optional<int> perimeter_;
    std::optional<long long> size_;
    bool no_ones_ = false;
};

}  // namespace partlab
