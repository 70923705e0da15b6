#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partlab/counting.hpp"
#include "partlab/verify.hpp"

using namespace partlab;

TEST_CASE("franklin suite passes") {
    const VerificationReport r = verify_franklin(18, {2, 3, 4, 5}, 4);
    CHECK(r.pass());
    CHECK(r.failures == 0);
    CHECK_FALSE(r.first_counterexample.has_value());
    CHECK(r.witnesses > 0);
    CHECK(r.check == "franklin");
    CHECK(r.grid == "n<=18 r={2,3,4,5} j<=4");

    CHECK(verify_franklin(0, {2}, 0).pass());
}

TEST_CASE("franklin report is deterministic") {
    const VerificationReport a = verify_franklin(12, {2, 3}, 3);
    const VerificationReport b = verify_franklin(12, {2, 3}, 3);
    CHECK(a.witnesses == b.witnesses);
    CHECK(a.failures == b.failures);
    CHECK(a.grid == b.grid);
}

TEST_CASE("theorem1 suite passes") {
    const VerificationReport r = verify_theorem1(14, {2, 3, 4, 5});
    CHECK(r.pass());
    CHECK(r.witnesses > 0);

    CHECK(verify_theorem1(1, {2}).pass());
    CHECK(verify_theorem1(3, {2}).pass());
}

TEST_CASE("beck suite passes") {
    const VerificationReport r = verify_beck(30);
    CHECK(r.pass());
    CHECK(r.witnesses == 2 * 31);
    CHECK(verify_beck(0).pass());
}

TEST_CASE("perimeter suite passes") {
    const VerificationReport r = verify_perimeter(10, 60);
    CHECK(r.pass());
    CHECK(r.witnesses > 0);
    const VerificationReport small = verify_perimeter(5, 8);
    CHECK(small.pass());
}

TEST_CASE("perimeter suite threaded matches sequential") {
    const VerificationReport seq = verify_perimeter(11, 30, 1);
    const VerificationReport par = verify_perimeter(11, 30, 4);
    CHECK(seq.pass());
    CHECK(par.pass());
    CHECK(seq.witnesses == par.witnesses);
}

TEST_CASE("conjecture scan r=3") {
    const ConjectureScan scan = conjecture_scan(3, 60);
    CHECK(scan.r == 3);
    CHECK(scan.m_max == 60);
    CHECK(scan.margins.size() == 60);
    CHECK_FALSE(scan.first_violation.has_value());
    REQUIRE(scan.first_strict_gap.has_value());
    CHECK(*scan.first_strict_gap == 4);
    // witness counts at the first gap: g_3(4) = 5, h_3(4) = 6
    CHECK(scan.g_values[3] == 5);
    CHECK(scan.h_values[3] == 6);
    CHECK(scan.margins[3] == 1);
}

TEST_CASE("conjecture scan r=2 has zero margins") {
    const ConjectureScan scan = conjecture_scan(2, 40);
    CHECK_FALSE(scan.first_violation.has_value());
    CHECK_FALSE(scan.first_strict_gap.has_value());
    for (const BigInt& margin : scan.margins) CHECK(margin == 0);
}

TEST_CASE("conjecture scan margins stay non-negative") {
    for (int r = 2; r <= 6; ++r) {
        const ConjectureScan scan = conjecture_scan(r, 200);
        CHECK_FALSE(scan.first_violation.has_value());
    }
}

TEST_CASE("scan cross-check agrees with the perimeter tables") {
    const ConjectureScan scan = conjecture_scan(4, 12, 12);
    for (int m = 1; m <= 12; ++m) {
        const auto counts = regular_perimeter_counts(m, 4);
        CHECK(scan.g_values[m - 1] == counts.g_r);
        CHECK(scan.h_values[m - 1] == counts.h_r);
        CHECK(scan.margins[m - 1] == counts.h_r - counts.g_r);
    }
}

TEST_CASE("scan rejects bad parameters") {
    CHECK_THROWS_AS(conjecture_scan(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_scan(3, 0), std::invalid_argument);
}
