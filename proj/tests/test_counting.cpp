#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "partlab/counting.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/fibonacci.hpp"

using namespace partlab;

TEST_CASE("franklin counts") {
    CHECK(franklin_counts(5, 2, 1) == std::pair<BigInt, BigInt>{4, 4});
    CHECK(franklin_counts(0, 2, 0) == std::pair<BigInt, BigInt>{1, 1});

    // brute-force check of the j=1 classes at n=5 against the known lists
    std::set<Partition> o_class, d_class;
    for (const Partition& p : SizeRange(5, ConstraintSpec{}.exactly_divisible(2, 1))) o_class.insert(p);
    for (const Partition& p : SizeRange(5, ConstraintSpec{}.exactly_repeated(2, 1))) d_class.insert(p);
    CHECK(o_class == std::set<Partition>{Partition({4, 1}), Partition({3, 2}), Partition({2, 2, 1}),
                                         Partition({2, 1, 1, 1})});
    CHECK(d_class == std::set<Partition>{Partition({3, 1, 1}), Partition({2, 2, 1}),
                                         Partition({2, 1, 1, 1}), Partition({1, 1, 1, 1, 1})});

    // n=5, j=2: frozen from the brute-force filter over all 7 partitions
    BigInt o2 = 0, d2 = 0;
    for (const Partition& p : SizeRange(5)) {
        int divisible = 0, repeated = 0;
        for (auto [value, mult] : p.multiplicities()) {
            if (value % 2 == 0) ++divisible;
            if (mult >= 2) ++repeated;
        }
        if (divisible == 2) ++o2;
        if (repeated == 2) ++d2;
    }
    CHECK(franklin_counts(5, 2, 2) == std::pair<BigInt, BigInt>{o2, d2});
    CHECK(o2 == 0);
    CHECK(d2 == 0);
}

TEST_CASE("franklin identity over a grid") {
    for (int n = 0; n <= 24; ++n) {
        BigInt p_n = 0;
        for ([[maybe_unused]] const Partition& p : SizeRange(n)) ++p_n;
        for (int r : {2, 3, 4, 5}) {
            BigInt o_total = 0;
            for (int j = 0; j * r <= n + r; ++j) {
                const auto [o, d] = franklin_counts(n, r, j);
                CHECK(o == d);
                o_total += o;
            }
            CHECK(o_total == p_n);
        }
    }
}

TEST_CASE("refined counts") {
    CHECK(refined_counts(3, 2, 1) == std::pair<BigInt, BigInt>{1, 1});
    CHECK(refined_counts(1, 2, 1) == std::pair<BigInt, BigInt>{0, 0});

    // alpha_1^{(3)}(6): frozen from the oracle list {(6),(3,2,1),(3,1,1,1)}
    CHECK(refined_counts(6, 3, 1) == std::pair<BigInt, BigInt>{3, 3});

    // sum over u of alpha equals |O(n;r,1)|
    for (int n = 0; n <= 18; ++n) {
        for (int r : {2, 3, 4}) {
            BigInt alpha_total = 0;
            for (int u = 1; u <= std::max(n, 1); ++u) {
                const auto [alpha, beta] = refined_counts(n, r, u);
                CHECK(alpha == beta);
                alpha_total += alpha;
            }
            CHECK(alpha_total == franklin_counts(n, r, 1).first);
        }
    }
}

TEST_CASE("beck totals") {
    const BeckTotals b5 = beck_totals(5);
    CHECK(b5.a == 9);
    CHECK(b5.b == 5);
    CHECK(b5.o21 == 4);
    CHECK(b5.d21 == 4);

    const BeckTotals b0 = beck_totals(0);
    CHECK(b0.a == 0);
    CHECK(b0.b == 0);
    CHECK(b0.o21 == 0);
    CHECK(b0.d21 == 0);

    const BeckTotals b1 = beck_totals(1);
    CHECK(b1.a == 1);
    CHECK(b1.b == 1);
    CHECK(b1.o21 == 0);
    CHECK(b1.d21 == 0);

    for (int n = 0; n <= 30; ++n) {
        const BeckTotals t = beck_totals(n);
        CHECK(t.a - t.b == t.o21);
        CHECK(t.o21 == t.d21);
    }
}

TEST_CASE("perimeter table known rows") {
    const PerimeterTable t5 = perimeter_table(5);
    CHECK(t5.g == 15);
    CHECK(t5.h == 10);
    CHECK(t5.g1 == 10);
    CHECK(t5.h1 == 10);
    CHECK(t5.t_row == std::map<long long, BigInt>{{5, 5}, {6, 3}, {7, 4}, {8, 3}, {9, 1}});

    const PerimeterTable t4 = perimeter_table(4);
    CHECK(t4.g == 8);
    CHECK(t4.h == 5);
    CHECK(t4.index_sum == 3);
    CHECK(t4.g1_no_one == 3);

    const PerimeterTable t1 = perimeter_table(1);
    CHECK(t1.g == 1);
    CHECK(t1.h == 1);
    CHECK(t1.g1 == 0);
    CHECK(t1.h1 == 0);
    CHECK(t1.index_sum == 0);
    CHECK(t1.t_row == std::map<long long, BigInt>{{1, 1}});
}

TEST_CASE("perimeter table example 1 sequences") {
    const BigInt g_row[] = {1, 2, 4, 8, 15, 28, 51, 92};
    const BigInt h_row[] = {1, 1, 3, 5, 10, 18, 33, 59};
    const BigInt g1_row[] = {0, 1, 2, 5, 10, 20, 38, 71};
    const BigInt gmh_row[] = {0, 1, 1, 3, 5, 10, 18, 33};
    for (int m = 1; m <= 8; ++m) {
        const PerimeterTable t = perimeter_table(m);
        CHECK(t.g == g_row[m - 1]);
        CHECK(t.h == h_row[m - 1]);
        CHECK(t.g1 == g1_row[m - 1]);
        CHECK(t.h1 == g1_row[m - 1]);
        CHECK(t.g - t.h == gmh_row[m - 1]);
    }
}

TEST_CASE("perimeter table structural identities up to M = 22") {
    for (int m = 1; m <= 22; ++m) {
        const PerimeterTable t = perimeter_table(m, 4);
        CHECK(t.g1 == t.h1);
        CHECK(t.index_sum == t.g - t.h);
        CHECK(t.g1_no_one == t.g - t.h);
        CHECK(t.index_sum >= 0);
        BigInt total = 0;
        for (const auto& [size, count] : t.t_row) total += count;
        CHECK(total == BigInt(1) << (m - 1));
    }
}

TEST_CASE("perimeter table threaded pass matches sequential") {
    for (int m : {1, 2, 11, 16}) {
        const PerimeterTable seq = perimeter_table(m, 1);
        const PerimeterTable par = perimeter_table(m, 4);
        CHECK(seq.g == par.g);
        CHECK(seq.h == par.h);
        CHECK(seq.g1 == par.g1);
        CHECK(seq.h1 == par.h1);
        CHECK(seq.index_sum == par.index_sum);
        CHECK(seq.g1_no_one == par.g1_no_one);
        CHECK(seq.t_row == par.t_row);
    }
}

TEST_CASE("m=4 witness set for the index identity") {
    // G(4) = {(3,1), (3,3), (1,1,1,1)} with indices 0, 0, 3
    std::map<Partition, int> indices;
    for (const Partition& p : PerimeterRange(4, ConstraintSpec{}.odd())) indices[p] = m2_index(p);
    CHECK(indices == std::map<Partition, int>{
                         {Partition({3, 1}), 0}, {Partition({3, 3}), 0}, {Partition({1, 1, 1, 1}), 3}});
}

TEST_CASE("regular perimeter counts") {
    const auto m3r3 = regular_perimeter_counts(3, 3);
    CHECK(m3r3.g_r == 3);
    CHECK(m3r3.h_r == 3);
    CHECK_FALSE(m3r3.g_r_d.has_value());

    const auto m1 = regular_perimeter_counts(1, 2, 1);
    CHECK(m1.g_r == 1);
    CHECK(m1.h_r == 1);
    CHECK(m1.g_r_d == BigInt(1));

    // g_2^{(1)}(M) = F_M: odd parts are exactly the parts congruent 1 mod 2
    const auto m6 = regular_perimeter_counts(6, 2, 1);
    CHECK(m6.g_r_d == fibonacci(6));
    CHECK(*m6.g_r_d == 8);

    CHECK_THROWS_AS(regular_perimeter_counts(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(regular_perimeter_counts(3, 3, 3), std::invalid_argument);

    // cross-check against constraint-filtered enumeration
    for (int m = 1; m <= 10; ++m) {
        for (int r : {2, 3, 4}) {
            const auto counts = regular_perimeter_counts(m, r, 1);
            CHECK(counts.g_r == BigInt(enumerate_by_perimeter(m, ConstraintSpec{}.regular(r)).size()));
            CHECK(counts.h_r ==
                  BigInt(enumerate_by_perimeter(m, ConstraintSpec{}.multiplicity_below(r)).size()));
            CHECK(*counts.g_r_d ==
                  BigInt(enumerate_by_perimeter(m, ConstraintSpec{}.congruent_to(1, r)).size()));
        }
    }
}
