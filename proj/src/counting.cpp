#include "partlab/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "partlab/enumerate.hpp"

namespace partlab {

namespace {

void require_modulus(int r) {
    if (r < 2) throw std::invalid_argument("modulus r must be >= 2, got " + std::to_string(r));
}

// Part-value classification shared by the by-size counters: the number
// of part values divisible by r and, when unique, its multiplicity.
struct DivisibleProfile {
    int values = 0;
    int value = 0;
    int mult = 0;
};

DivisibleProfile divisible_profile(const std::vector<std::pair<int, int>>& mults, int r) {
    DivisibleProfile d;
    for (auto [value, mult] : mults) {
        if (value % r == 0) {
            ++d.values;
            d.value = value;
            d.mult = mult;
        }
    }
    return d;
}

DivisibleProfile repeated_profile(const std::vector<std::pair<int, int>>& mults, int r) {
    DivisibleProfile d;
    for (auto [value, mult] : mults) {
        if (mult >= r) {
            ++d.values;
            d.value = value;
            d.mult = mult;
        }
    }
    return d;
}

// Accumulates PerimeterTable statistics for words k in [lo, hi).
void accumulate_range(int m, std::uint64_t lo, std::uint64_t hi, PerimeterTable& table) {
    std::vector<int> parts;  // ascending
    for (std::uint64_t k = lo; k < hi; ++k) {
        decode_perimeter_word(m, k, parts);
        const int length = static_cast<int>(parts.size());
        const int largest = parts.back();

        long long size = 0;
        bool all_odd = true;
        int even_values = 0;
        int repeated_values = 0;
        bool has_one = false;
        int prev = 0;
        int prev_even_value = 0;
        bool prev_repeated = false;
        for (int part : parts) {
            size += part;
            if (part == 1) has_one = true;
            if (part % 2 == 0) {
                all_odd = false;
                if (part != prev_even_value) {
                    ++even_values;
                    prev_even_value = part;
                }
            }
            if (part == prev) {
                if (!prev_repeated) {
                    ++repeated_values;
                    prev_repeated = true;
                }
            } else {
                prev_repeated = false;
            }
            prev = part;
        }
        const bool all_distinct = repeated_values == 0;

        if (all_odd) {
            table.g += length;
            table.index_sum += length - 1 - largest / 2;
        }
        if (all_distinct) table.h += length;
        if (even_values == 1) {
            // remaining parts must all be odd: exactly one even value
            table.g1 += 1;
            if (!has_one) table.g1_no_one += 1;
        }
        if (repeated_values == 1) table.h1 += 1;
        table.t_row[size] += 1;
    }
}

}  // namespace

std::pair<BigInt, BigInt> franklin_counts(long long n, int r, int j) {
    require_modulus(r);
    if (j < 0) throw std::invalid_argument("class count j must be >= 0");
    BigInt o = 0, d = 0;
    for (const Partition& p : SizeRange(n)) {
        const auto mults = p.multiplicities();
        if (divisible_profile(mults, r).values == j) ++o;
        if (repeated_profile(mults, r).values == j) ++d;
    }
    return {o, d};
}

std::pair<BigInt, BigInt> refined_counts(long long n, int r, int u) {
    require_modulus(r);
    if (u < 1) throw std::invalid_argument("refinement parameter u must be >= 1");
    BigInt alpha = 0, beta = 0;
    for (const Partition& p : SizeRange(n)) {
        const auto mults = p.multiplicities();
        const auto div = divisible_profile(mults, r);
        if (div.values == 1 && div.mult == u) ++alpha;
        const auto rep = repeated_profile(mults, r);
        if (rep.values == 1 && rep.value == u) ++beta;
    }
    return {alpha, beta};
}

BeckTotals beck_totals(long long n) {
    BeckTotals totals;
    for (const Partition& p : SizeRange(n)) {
        const auto mults = p.multiplicities();
        bool all_odd = true;
        bool all_distinct = true;
        for (auto [value, mult] : mults) {
            if (value % 2 == 0) all_odd = false;
            if (mult > 1) all_distinct = false;
        }
        if (all_odd) totals.a += p.length();
        if (all_distinct) totals.b += p.length();
        if (divisible_profile(mults, 2).values == 1) ++totals.o21;
        if (repeated_profile(mults, 2).values == 1) ++totals.d21;
    }
    return totals;
}

PerimeterTable perimeter_table(int m, int threads) {
    if (m < 1) throw std::invalid_argument("perimeter must be >= 1");
    if (m > 40) throw std::invalid_argument("perimeter_table is exhaustive; m <= 40 required");
    if (threads < 1) threads = 1;

    PerimeterTable table;
    table.m = m;
    const std::uint64_t total = std::uint64_t{1} << (m - 1);

    if (threads == 1 || total < 1024) {
        accumulate_range(m, 0, total, table);
        return table;
    }

    const std::uint64_t count = std::min<std::uint64_t>(threads, 64);
    std::vector<PerimeterTable> partial(count);
    std::vector<std::thread> workers;
    workers.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
        const std::uint64_t lo = total / count * t;
        const std::uint64_t hi = t + 1 == count ? total : total / count * (t + 1);
        workers.emplace_back([m, lo, hi, &slot = partial[t]] { accumulate_range(m, lo, hi, slot); });
    }
    for (auto& w : workers) w.join();
    for (const auto& part : partial) {
        table.g += part.g;
        table.h += part.h;
        table.g1 += part.g1;
        table.h1 += part.h1;
        table.index_sum += part.index_sum;
        table.g1_no_one += part.g1_no_one;
        for (const auto& [size, count_n] : part.t_row) table.t_row[size] += count_n;
    }
    return table;
}

RegularPerimeterCounts regular_perimeter_counts(int m, int r, std::optional<int> d) {
    require_modulus(r);
    if (m < 1) throw std::invalid_argument("perimeter must be >= 1");
    if (d && (*d < 1 || *d >= r))
        throw std::invalid_argument("residue d must satisfy 1 <= d < r");

    RegularPerimeterCounts counts;
    if (d) counts.g_r_d = BigInt{0};
    std::vector<int> parts;
    const std::uint64_t total = std::uint64_t{1} << (m - 1);
    for (std::uint64_t k = 0; k < total; ++k) {
        decode_perimeter_word(m, k, parts);
        bool regular = true;
        bool mult_ok = true;
        bool congruent = d.has_value();
        int run = 0;
        int prev = 0;
        for (int part : parts) {
            if (part % r == 0) regular = false;
            if (d && part % r != *d) congruent = false;
            run = part == prev ? run + 1 : 1;
            if (run >= r) mult_ok = false;
            prev = part;
        }
        if (regular) ++counts.g_r;
        if (mult_ok) ++counts.h_r;
        if (congruent) ++*counts.g_r_d;
    }
    return counts;
}

}  // namespace partlab
