#include "partlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "partlab/bijections.hpp"
#include "partlab/counting.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/fibonacci.hpp"
#include "partlab/series.hpp"

namespace partlab {

namespace {

using Clock = std::chrono::steady_clock;

std::string join_r_set(const std::vector<int>& r_set) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < r_set.size(); ++i) {
        if (i) out << ",";
        out << r_set[i];
    }
    out << "}";
    return out.str();
}

// Shared bookkeeping: count a comparison, record the first mismatch.
struct Checker {
    VerificationReport& report;

    template <typename L, typename R>
    void expect_eq(const L& lhs, const R& rhs, const std::string& params) {
        ++report.witnesses;
        if (lhs == rhs) return;
        ++report.failures;
        if (!report.first_counterexample) {
            std::ostringstream l, r;
            l << lhs;
            r << rhs;
            report.first_counterexample = Counterexample{params, l.str(), r.str()};
        }
    }

    void expect(bool ok, const std::string& params, const std::string& lhs, const std::string& rhs) {
        ++report.witnesses;
        if (ok) return;
        ++report.failures;
        if (!report.first_counterexample) report.first_counterexample = Counterexample{params, lhs, rhs};
    }
};

}  // namespace

VerificationReport verify_franklin(int n_max, const std::vector<int>& r_set, int j_max) {
    const auto start = Clock::now();
    VerificationReport report;
    report.check = "franklin";
    report.grid = "n<=" + std::to_string(n_max) + " r=" + join_r_set(r_set) + " j<=" + std::to_string(j_max);
    Checker check{report};

    for (int n = 0; n <= n_max; ++n) {
        // One enumeration per n; histogram by j for every r at once.
        std::map<int, std::vector<BigInt>> o_by_r, d_by_r;
        for (int r : r_set) {
            o_by_r[r].assign(static_cast<std::size_t>(n) + 2, 0);
            d_by_r[r].assign(static_cast<std::size_t>(n) + 2, 0);
        }
        BigInt total = 0;
        for (const Partition& p : SizeRange(n)) {
            ++total;
            const auto mults = p.multiplicities();
            for (int r : r_set) {
                int divisible = 0, repeated = 0;
                for (auto [value, mult] : mults) {
                    if (value % r == 0) ++divisible;
                    if (mult >= r) ++repeated;
                }
                ++o_by_r[r][divisible];
                ++d_by_r[r][repeated];
            }
        }
        static const BigInt zero = 0;
        for (int r : r_set) {
            const auto& o = o_by_r[r];
            const auto& d = d_by_r[r];
            for (int j = 0; j <= j_max; ++j) {
                const BigInt& oj = j < static_cast<int>(o.size()) ? o[j] : zero;
                const BigInt& dj = j < static_cast<int>(d.size()) ? d[j] : zero;
                check.expect_eq(oj, dj, "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                            " j=" + std::to_string(j));
            }
            BigInt o_sum = 0;
            for (const auto& v : o) o_sum += v;
            check.expect_eq(o_sum, total, "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                              " sum_j |O| vs p(n)");
        }
    }
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

VerificationReport verify_theorem1(int n_max, const std::vector<int>& r_set) {
    const auto start = Clock::now();
    VerificationReport report;
    report.check = "theorem1";
    report.grid = "n<=" + std::to_string(n_max) + " r=" + join_r_set(r_set);
    Checker check{report};

    for (int n = 0; n <= n_max; ++n) {
        for (int r : r_set) {
            std::map<int, BigInt> alpha, beta;
            BigInt o_class = 0, d_class = 0;
            std::set<Partition> images;
            for (const Partition& p : SizeRange(n)) {
                const auto mults = p.multiplicities();
                int divisible = 0, repeated = 0;
                int div_mult = 0, rep_value = 0;
                for (auto [value, mult] : mults) {
                    if (value % r == 0) {
                        ++divisible;
                        div_mult = mult;
                    }
                    if (mult >= r) {
                        ++repeated;
                        rep_value = value;
                    }
                }
                if (repeated == 1) {
                    ++d_class;
                    ++beta[rep_value];
                }
                if (divisible != 1) continue;
                ++o_class;
                ++alpha[div_mult];

                const std::string tag =
                    "n=" + std::to_string(n) + " r=" + std::to_string(r) + " lambda=" + p.to_string();
                const Partition image = refined_franklin(p, r);
                check.expect(image.size() == p.size(), tag + " size preserved",
                             std::to_string(image.size()), std::to_string(p.size()));

                int image_repeated = 0, image_rep_value = 0;
                for (auto [value, mult] : image.multiplicities()) {
                    if (mult >= r) {
                        ++image_repeated;
                        image_rep_value = value;
                    }
                }
                check.expect(image_repeated == 1 && image_rep_value == div_mult,
                             tag + " image class D_u", image.to_string(), "u=" + std::to_string(div_mult));
                check.expect(images.insert(image).second, tag + " injective", image.to_string(),
                             "collision");
                check.expect(refined_franklin_inv(image, r) == p, tag + " round trip",
                             refined_franklin_inv(image, r).to_string(), p.to_string());
            }
            std::set<int> u_values;
            for (const auto& [u, count] : alpha) u_values.insert(u);
            for (const auto& [u, count] : beta) u_values.insert(u);
            BigInt alpha_sum = 0;
            for (int u : u_values) {
                check.expect_eq(alpha[u], beta[u], "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                                       " u=" + std::to_string(u));
                alpha_sum += alpha[u];
            }
            check.expect_eq(alpha_sum, o_class,
                            "n=" + std::to_string(n) + " r=" + std::to_string(r) + " sum_u alpha");
            check.expect_eq(BigInt(images.size()), d_class,
                            "n=" + std::to_string(n) + " r=" + std::to_string(r) + " |image| vs |D1|");
        }
    }
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

VerificationReport verify_beck(int n_max) {
    const auto start = Clock::now();
    VerificationReport report;
    report.check = "beck";
    report.grid = "n<=" + std::to_string(n_max);
    Checker check{report};

    for (int n = 0; n <= n_max; ++n) {
        const BeckTotals totals = beck_totals(n);
        const std::string tag = "n=" + std::to_string(n);
        check.expect_eq(totals.a - totals.b, totals.o21, tag + " a-b vs |O(n;2,1)|");
        check.expect_eq(totals.o21, totals.d21, tag + " |O(n;2,1)| vs |D(n;2,1)|");
    }
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

VerificationReport verify_perimeter(int m_max_enum, int m_max_series, int threads) {
    const auto start = Clock::now();
    VerificationReport report;
    report.check = "perimeter";
    report.grid =
        "enum M<=" + std::to_string(m_max_enum) + " series M<=" + std::to_string(m_max_series);
    Checker check{report};

    const int m_top = std::max(m_max_enum, m_max_series);
    const auto series_g = series_coeffs(gf_catalog("g"), m_top);
    const auto series_h = series_coeffs(gf_catalog("h"), m_top);
    const auto series_g1 = series_coeffs(gf_catalog("g1"), m_top);
    const auto series_h1 = series_coeffs(gf_catalog("h1"), m_top);
    const auto series_gmh = series_coeffs(gf_catalog("g_minus_h"), m_top);

    // Recurrence iteration state, seeded with the f(0) = 0 convention.
    BigInt rec_g_prev = 0, rec_g = 1;
    BigInt rec_h_prev = 0, rec_h = 1;
    BigInt rec_g1_prev = 0, rec_g1 = 0;
    BigInt rec_h1_prev = 0, rec_h1 = 0;

    for (int m = 1; m <= m_top; ++m) {
        const std::string tag = "M=" + std::to_string(m);
        if (m >= 2) {
            BigInt next = recurrence_step("g", rec_g_prev, rec_g, m);
            rec_g_prev = rec_g;
            rec_g = next;
            next = recurrence_step("h", rec_h_prev, rec_h, m);
            rec_h_prev = rec_h;
            rec_h = next;
            next = recurrence_step("g1", rec_g1_prev, rec_g1, m);
            rec_g1_prev = rec_g1;
            rec_g1 = next;
            next = recurrence_step("h1", rec_h1_prev, rec_h1, m);
            rec_h1_prev = rec_h1;
            rec_h1 = next;
        }

        // Four-way agreement on the formula routes.
        check.expect_eq(series_g[m - 1], closed_form("g", m), tag + " g series vs closed form");
        check.expect_eq(series_h[m - 1], closed_form("h", m), tag + " h series vs closed form");
        check.expect_eq(series_g1[m - 1], closed_form("g1", m), tag + " g1 series vs closed form");
        check.expect_eq(series_g1[m - 1], series_h1[m - 1], tag + " g1 vs h1 series");
        check.expect_eq(series_g[m - 1], rec_g, tag + " g series vs recurrence");
        check.expect_eq(series_h[m - 1], rec_h, tag + " h series vs recurrence");
        check.expect_eq(series_g1[m - 1], rec_g1, tag + " g1 series vs recurrence");
        check.expect_eq(series_h1[m - 1], rec_h1, tag + " h1 series vs recurrence");
        if (m >= 2) {
            check.expect_eq(series_g[m - 1], fib_convolution("cfib1", m), tag + " g vs cfib1");
            check.expect_eq(series_h[m - 1], fib_convolution("cfib2", m), tag + " h vs cfib2");
            check.expect_eq(series_g1[m - 1], fib_convolution("cfib3", m), tag + " g1 vs cfib3");
            check.expect_eq(series_gmh[m - 1], fib_convolution("cfib4", m), tag + " g-h vs cfib4");
            check.expect_eq(series_gmh[m - 1], series_g1[m - 1] - series_g1[m - 2],
                            tag + " g-h vs g1(M)-g1(M-1)");
        }
        check.expect_eq(series_gmh[m - 1], series_g[m - 1] - series_h[m - 1], tag + " g-h series");
        check.expect_eq(series_gmh[m - 1], closed_form("index_sum", m), tag + " g-h vs index closed form");

        if (m > m_max_enum) continue;

        // Exhaustive enumeration pass against every formula route.
        const PerimeterTable table = perimeter_table(m, threads);
        check.expect_eq(table.g, series_g[m - 1], tag + " g enumeration");
        check.expect_eq(table.h, series_h[m - 1], tag + " h enumeration");
        check.expect_eq(table.g1, series_g1[m - 1], tag + " g1 enumeration");
        check.expect_eq(table.h1, series_h1[m - 1], tag + " h1 enumeration");
        check.expect_eq(table.g1, table.h1, tag + " g1 vs h1 enumeration");
        check.expect_eq(table.index_sum, table.g - table.h, tag + " index sum vs g-h");
        check.expect_eq(table.g1_no_one, table.g - table.h, tag + " g1 no-one count vs g-h");
        check.expect(table.index_sum >= 0, tag + " index sum non-negative", table.index_sum.str(), ">=0");
        BigInt t_total = 0;
        for (const auto& [size, count] : table.t_row) t_total += count;
        check.expect_eq(t_total, BigInt(1) << (m - 1), tag + " t_row total vs 2^(M-1)");

        // Straub cardinalities and the executable fu_tang bijection.
        const BigInt fib = fibonacci(m);
        BigInt h_count = 0;
        std::set<Partition> images;
        for (const Partition& p : PerimeterRange(m, ConstraintSpec{}.distinct())) {
            ++h_count;
            const Partition image = fu_tang(p);
            bool odd = true;
            for (int part : image.parts())
                if (part % 2 == 0) odd = false;
            check.expect(odd && image.perimeter() == m, tag + " fu_tang image in G lambda=" + p.to_string(),
                         image.to_string(), "odd parts, perimeter " + std::to_string(m));
            check.expect(images.insert(image).second, tag + " fu_tang injective lambda=" + p.to_string(),
                         image.to_string(), "collision");
            check.expect(fu_tang_inv(image) == p, tag + " fu_tang round trip lambda=" + p.to_string(),
                         fu_tang_inv(image).to_string(), p.to_string());
        }
        BigInt g_count = 0;
        for ([[maybe_unused]] const Partition& p : PerimeterRange(m, ConstraintSpec{}.odd())) ++g_count;
        check.expect_eq(h_count, fib, tag + " |H(M)| vs F_M");
        check.expect_eq(g_count, fib, tag + " |G(M)| vs F_M");
        check.expect_eq(BigInt(images.size()), g_count, tag + " fu_tang image covers G(M)");
    }
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

ConjectureScan conjecture_scan(int r, int m_max, int cross_check_max) {
    if (r < 2) throw std::invalid_argument("modulus r must be >= 2, got " + std::to_string(r));
    if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");

    ConjectureScan scan;
    scan.r = r;
    scan.m_max = m_max;
    scan.g_values = series_coeffs(gf_catalog("g_r", r), m_max);
    scan.h_values = series_coeffs(gf_catalog("h_r", r), m_max);
    scan.margins.reserve(m_max);

    const int check_top = std::min(m_max, cross_check_max);
    for (int m = 1; m <= check_top; ++m) {
        const auto counts = regular_perimeter_counts(m, r);
        if (counts.g_r != scan.g_values[m - 1] || counts.h_r != scan.h_values[m - 1]) {
            throw std::runtime_error("internal consistency error: series and enumeration disagree at r=" +
                                     std::to_string(r) + " M=" + std::to_string(m));
        }
    }

    for (int m = 1; m <= m_max; ++m) {
        BigInt margin = scan.h_values[m - 1] - scan.g_values[m - 1];
        if (margin < 0 && !scan.first_violation) scan.first_violation = m;
        if (margin > 0 && !scan.first_strict_gap) scan.first_strict_gap = m;
        scan.margins.push_back(std::move(margin));
    }
    return scan;
}

}  // namespace partlab
