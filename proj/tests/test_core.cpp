#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "partlab/enumerate.hpp"
#include "partlab/fibonacci.hpp"
#include "partlab/partition.hpp"

using namespace partlab;

namespace {

// Independent profile construction from column heights: at abscissa x
// emit a right step, then one up step per unit drop of the column
// height h(x) = #{i : part_i > x}. Exercises a different decomposition
// of the boundary than the library's row-based walk.
std::string profile_by_column_walk(const std::vector<int>& parts) {
    if (parts.empty()) return "";
    auto height = [&](int x) {
        int h = 0;
        for (int part : parts)
            if (part > x) ++h;
        return h;
    };
    std::string word;
    for (int x = 0; x < parts.front(); ++x) {
        word.push_back('1');
        word.append(height(x) - height(x + 1), '0');
    }
    return word;
}

}  // namespace

TEST_CASE("partition basics") {
    const Partition p({6, 6, 3, 2, 2, 1});
    CHECK(p.size() == 20);
    CHECK(p.length() == 6);
    CHECK(p.largest() == 6);
    CHECK(p.to_string() == "6,6,3,2,2,1");
    CHECK(p.multiplicities() == std::vector<std::pair<int, int>>{{6, 2}, {3, 1}, {2, 2}, {1, 1}});

    const Partition empty;
    CHECK(empty.empty());
    CHECK(empty.size() == 0);
    CHECK(empty.length() == 0);
    CHECK(empty.to_string() == "");

    CHECK_THROWS_AS(Partition({3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);

    CHECK(Partition::parse("6,6,3,2,2,1") == p);
    CHECK(Partition::parse("") == empty);
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
}

TEST_CASE("perimeter") {
    CHECK(Partition({6, 6, 3, 2, 2, 1}).perimeter() == 11);
    CHECK(Partition({1}).perimeter() == 1);
    CHECK(Partition().perimeter() == 0);
    CHECK(Partition({4, 3}).perimeter() == 5);
}

TEST_CASE("profile words") {
    CHECK(to_profile(Partition({6, 6, 3, 2, 2, 1})).to_string() == "101001011100");
    CHECK(to_profile(Partition({1})).to_string() == "10");
    CHECK(to_profile(Partition({3})).to_string() == profile_by_column_walk({3}));
    CHECK(to_profile(Partition({3})).to_string() == "1110");
    CHECK(to_profile(Partition()).empty());

    CHECK(from_profile(ProfileWord::parse("101001011100")) == Partition({6, 6, 3, 2, 2, 1}));
    CHECK(from_profile(ProfileWord::parse("10")) == Partition({1}));
    CHECK(from_profile(ProfileWord::parse("1110")) == Partition({3}));
    CHECK(from_profile(ProfileWord()) == Partition());

    // malformed words: leading 0, trailing 1, all-0 / all-1 words
    CHECK_THROWS_AS(ProfileWord::parse("010"), std::invalid_argument);
    CHECK_THROWS_AS(ProfileWord::parse("101"), std::invalid_argument);
    CHECK_THROWS_AS(ProfileWord::parse("000"), std::invalid_argument);
    CHECK_THROWS_AS(ProfileWord::parse("111"), std::invalid_argument);
    CHECK_THROWS_AS(ProfileWord::parse("1a0"), std::invalid_argument);
}

TEST_CASE("profile round trips and counts up to perimeter 12") {
    for (int m = 1; m <= 12; ++m) {
        BigInt count = 0;
        std::set<Partition> seen;
        for (const Partition& p : PerimeterRange(m)) {
            ++count;
            CHECK(p.perimeter() == m);
            const ProfileWord w = to_profile(p);
            CHECK(w.length() == m + 1);
            CHECK(w.zero_count() == p.length());
            CHECK(from_profile(w) == p);
            CHECK(w.to_string() == profile_by_column_walk(p.parts()));
            CHECK(seen.insert(p).second);
        }
        CHECK(count == BigInt(1) << (m - 1));
    }
}

TEST_CASE("profile laws for odd and distinct parts") {
    // odd parts <=> every prefix ending in 0 has an odd number of 1s;
    // distinct parts <=> no two adjacent 0s.
    for (int m = 1; m <= 10; ++m) {
        for (const Partition& p : PerimeterRange(m)) {
            bool all_odd = true, all_distinct = true;
            const auto& parts = p.parts();
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (parts[i] % 2 == 0) all_odd = false;
                if (i + 1 < parts.size() && parts[i] == parts[i + 1]) all_distinct = false;
            }
            const auto digits = to_profile(p).digits();
            bool parity_law = true;
            int ones = 0;
            for (std::size_t i = 0; i < digits.size(); ++i) {
                if (digits[i] == 1) ++ones;
                if (digits[i] == 0 && ones % 2 == 0) parity_law = false;
            }
            bool no_adjacent_zeros = true;
            for (std::size_t i = 0; i + 1 < digits.size(); ++i) {
                if (digits[i] == 0 && digits[i + 1] == 0) no_adjacent_zeros = false;
            }
            CHECK(all_odd == parity_law);
            CHECK(all_distinct == no_adjacent_zeros);
        }
    }
}

TEST_CASE("m2 index") {
    CHECK(m2_index(Partition({1, 1, 1, 1})) == 3);
    CHECK(m2_index(Partition({3, 1})) == 0);
    CHECK(m2_index(Partition({5})) == -2);
    CHECK(m2_index(Partition({3, 3})) == 0);
    CHECK_THROWS_AS(m2_index(Partition()), std::domain_error);
}

TEST_CASE("fibonacci convention") {
    CHECK(fibonacci(-1) == 1);
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(8) == 21);
    CHECK(fibonacci(50) == BigInt("12586269025"));
    CHECK_THROWS_AS(fibonacci(-2), std::domain_error);
}

TEST_CASE("enumerate by size: canonical order and classical counts") {
    const auto all5 = enumerate_by_size(5);
    std::vector<std::string> expected{"5", "4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1", "1,1,1,1,1"};
    REQUIRE(all5.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(all5[i].to_string() == expected[i]);

    const long long p_of_n[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231};
    for (int n = 0; n <= 16; ++n) {
        CHECK(enumerate_by_size(n).size() == static_cast<std::size_t>(p_of_n[n]));
    }

    CHECK(enumerate_by_size(0).size() == 1);
    CHECK(enumerate_by_size(0).front().empty());
}

TEST_CASE("enumerate by size with constraints") {
    const auto odd5 = enumerate_by_size(5, ConstraintSpec{}.odd());
    REQUIRE(odd5.size() == 3);
    CHECK(odd5[0] == Partition({5}));
    CHECK(odd5[1] == Partition({3, 1, 1}));
    CHECK(odd5[2] == Partition({1, 1, 1, 1, 1}));

    // exactly one even part value, repeated exactly twice
    const auto special = enumerate_by_size(6, ConstraintSpec{}.exactly_divisible(2, 1, 2));
    REQUIRE(special.size() == 1);
    CHECK(special[0] == Partition({2, 2, 1, 1}));

    const auto distinct6 = enumerate_by_size(6, ConstraintSpec{}.distinct());
    CHECK(distinct6.size() == 4);  // 6, 5+1, 4+2, 3+2+1
}

TEST_CASE("enumerate by perimeter") {
    const auto all5 = enumerate_by_perimeter(5);
    CHECK(all5.size() == 16);

    const auto size7 = enumerate_by_perimeter(5, ConstraintSpec{}.size_equals(7));
    std::set<Partition> expected{Partition({4, 3}), Partition({3, 3, 1}), Partition({3, 2, 2}),
                                 Partition({2, 2, 2, 1})};
    CHECK(std::set<Partition>(size7.begin(), size7.end()) == expected);

    const auto odd3 = enumerate_by_perimeter(3, ConstraintSpec{}.odd());
    CHECK(std::set<Partition>(odd3.begin(), odd3.end()) ==
          std::set<Partition>{Partition({3}), Partition({1, 1, 1})});

    CHECK_THROWS_AS(enumerate_by_perimeter(0), std::invalid_argument);
}

TEST_CASE("perimeter enumeration is stable across runs") {
    const auto first = enumerate_by_perimeter(7);
    const auto second = enumerate_by_perimeter(7);
    CHECK(first == second);
    // binary word order: the all-up word (1,1,...,1) comes first
    CHECK(first.front() == Partition({1, 1, 1, 1, 1, 1, 1}));
    CHECK(first.back() == Partition({7}));
}

TEST_CASE("straub cardinalities via enumeration") {
    for (int m = 1; m <= 14; ++m) {
        const auto odd = enumerate_by_perimeter(m, ConstraintSpec{}.odd());
        const auto distinct = enumerate_by_perimeter(m, ConstraintSpec{}.distinct());
        CHECK(BigInt(odd.size()) == fibonacci(m));
        CHECK(BigInt(distinct.size()) == fibonacci(m));
    }
}

TEST_CASE("constraint validation") {
    CHECK_THROWS_AS(ConstraintSpec{}.regular(1), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSpec{}.congruent_to(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSpec{}.congruent_to(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSpec{}.exactly_divisible(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSpec{}.exactly_repeated(2, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSpec{}.perimeter_equals(0), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSpec{}.size_equals(-1), std::invalid_argument);

    const ConstraintSpec mod = ConstraintSpec{}.congruent_to(1, 3);
    CHECK(mod.matches(Partition({7, 4, 1})));
    CHECK_FALSE(mod.matches(Partition({7, 5, 1})));
    CHECK(ConstraintSpec{}.no_ones().matches(Partition({3, 2})));
    CHECK_FALSE(ConstraintSpec{}.no_ones().matches(Partition({3, 1})));
}
