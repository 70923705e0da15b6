// Python bindings for the partlab core: partitions as tuples of ints,
// profile words as 0/1 strings, exact counts as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partlab/bigint.hpp"
#include "partlab/bijections.hpp"
#include "partlab/counting.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/fibonacci.hpp"
#include "partlab/partition.hpp"
#include "partlab/poly.hpp"
#include "partlab/series.hpp"
#include "partlab/verify.hpp"

namespace py = pybind11;
using namespace partlab;

namespace {

py::int_ to_py(const BigInt& value) {
    PyObject* obj = PyLong_FromString(value.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

BigInt to_big(const py::int_& value) { return BigInt(py::str(value).cast<std::string>()); }

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::tuple from_partition(const Partition& p) {
    py::tuple result(p.length());
    for (int i = 0; i < p.length(); ++i) result[i] = p.parts()[i];
    return result;
}

py::list from_partitions(const std::vector<Partition>& list) {
    py::list result;
    for (const Partition& p : list) result.append(from_partition(p));
    return result;
}

py::list from_big_vector(const std::vector<BigInt>& values) {
    py::list result;
    for (const BigInt& v : values) result.append(to_py(v));
    return result;
}

ConstraintSpec make_spec(bool odd, bool distinct, std::optional<int> regular,
                         std::optional<int> mult_below, std::optional<std::pair<int, int>> congruent,
                         bool no_ones, std::optional<long long> size_eq,
                         std::optional<std::vector<int>> divisible,
                         std::optional<std::vector<int>> repeated) {
    ConstraintSpec spec;
    if (odd) spec.odd();
    if (distinct) spec.distinct();
    if (regular) spec.regular(*regular);
    if (mult_below) spec.multiplicity_below(*mult_below);
    if (congruent) spec.congruent_to(congruent->first, congruent->second);
    if (no_ones) spec.no_ones();
    if (size_eq) spec.size_equals(*size_eq);
    auto class_args = [](const std::vector<int>& v, const char* name) {
        if (v.size() < 2 || v.size() > 3)
            throw std::invalid_argument(std::string(name) + " expects (r, j) or (r, j, u)");
        return std::make_tuple(v[0], v[1], v.size() == 3 ? std::optional<int>(v[2]) : std::nullopt);
    };
    if (divisible) {
        auto [r, j, u] = class_args(*divisible, "divisible");
        spec.exactly_divisible(r, j, u);
    }
    if (repeated) {
        auto [r, j, u] = class_args(*repeated, "repeated");
        spec.exactly_repeated(r, j, u);
    }
    return spec;
}

py::dict report_dict(const VerificationReport& report) {
    py::dict result;
    result["check"] = report.check;
    result["grid"] = report.grid;
    result["status"] = report.pass() ? "pass" : "fail";
    result["witnesses"] = report.witnesses;
    result["failures"] = report.failures;
    if (report.first_counterexample) {
        py::dict ce;
        ce["params"] = report.first_counterexample->params;
        ce["lhs"] = report.first_counterexample->lhs;
        ce["rhs"] = report.first_counterexample->rhs;
        result["counterexample"] = ce;
    } else {
        result["counterexample"] = py::none();
    }
    result["elapsed_seconds"] = report.elapsed_seconds;
    return result;
}

constexpr const char* kConstraintDoc =
    "Constraint keywords: odd, distinct, regular=r, mult_below=r, congruent=(d, r), "
    "no_ones, size_eq=n, divisible=(r, j[, u]), repeated=(r, j[, u]).";

}  // namespace

PYBIND11_MODULE(_partlab, m) {
    m.doc() = "Exact partition statistics, bijections and generating functions";

    // ---- partition statistics and the profile encoding ----
    m.def(
        "perimeter", [](const std::vector<int>& parts) { return to_partition(parts).perimeter(); },
        py::arg("parts"), "Largest hook length: largest part + number of parts - 1.");
    m.def(
        "size", [](const std::vector<int>& parts) { return to_partition(parts).size(); },
        py::arg("parts"));
    m.def(
        "m2_index", [](const std::vector<int>& parts) { return m2_index(to_partition(parts)); },
        py::arg("parts"), "length - 1 - floor(largest/2); defined for non-empty partitions.");
    m.def(
        "to_profile",
        [](const std::vector<int>& parts) { return to_profile(to_partition(parts)).to_string(); },
        py::arg("parts"), "Boundary profile word: 1 per right step, 0 per up step.");
    m.def(
        "from_profile",
        [](const std::string& word) { return from_partition(from_profile(ProfileWord::parse(word))); },
        py::arg("word"));
    m.def(
        "fibonacci", [](int m) { return to_py(fibonacci(m)); }, py::arg("m"),
        "Fibonacci numbers with F(-1) = 1, F(0) = 0, F(1) = 1.");

    // ---- enumeration ----
    const auto enum_args =
        [](auto&& fn) { return fn; };  // keep the long signatures readable below
    m.def(
        "enumerate_by_size",
        enum_args([](long long n, bool odd, bool distinct, std::optional<int> regular,
                     std::optional<int> mult_below, std::optional<std::pair<int, int>> congruent,
                     bool no_ones, std::optional<long long> size_eq,
                     std::optional<std::vector<int>> divisible, std::optional<std::vector<int>> repeated) {
            return from_partitions(enumerate_by_size(
                n, make_spec(odd, distinct, regular, mult_below, congruent, no_ones, size_eq,
                             divisible, repeated)));
        }),
        py::arg("n"), py::kw_only(), py::arg("odd") = false, py::arg("distinct") = false,
        py::arg("regular") = py::none(), py::arg("mult_below") = py::none(),
        py::arg("congruent") = py::none(), py::arg("no_ones") = false, py::arg("size_eq") = py::none(),
        py::arg("divisible") = py::none(), py::arg("repeated") = py::none(), kConstraintDoc);
    m.def(
        "enumerate_by_perimeter",
        enum_args([](int m, bool odd, bool distinct, std::optional<int> regular,
                     std::optional<int> mult_below, std::optional<std::pair<int, int>> congruent,
                     bool no_ones, std::optional<long long> size_eq,
                     std::optional<std::vector<int>> divisible, std::optional<std::vector<int>> repeated) {
            return from_partitions(enumerate_by_perimeter(
                m, make_spec(odd, distinct, regular, mult_below, congruent, no_ones, size_eq,
                             divisible, repeated)));
        }),
        py::arg("m"), py::kw_only(), py::arg("odd") = false, py::arg("distinct") = false,
        py::arg("regular") = py::none(), py::arg("mult_below") = py::none(),
        py::arg("congruent") = py::none(), py::arg("no_ones") = false, py::arg("size_eq") = py::none(),
        py::arg("divisible") = py::none(), py::arg("repeated") = py::none(), kConstraintDoc);

    // ---- bijections ----
    m.def(
        "glaisher",
        [](const std::vector<int>& parts, int r) {
            return from_partition(glaisher(to_partition(parts), r));
        },
        py::arg("parts"), py::arg("r"));
    m.def(
        "glaisher_inv",
        [](const std::vector<int>& parts, int r) {
            return from_partition(glaisher_inv(to_partition(parts), r));
        },
        py::arg("parts"), py::arg("r"));
    m.def(
        "refined_franklin",
        [](const std::vector<int>& parts, int r) {
            return from_partition(refined_franklin(to_partition(parts), r));
        },
        py::arg("parts"), py::arg("r"));
    m.def(
        "refined_franklin_inv",
        [](const std::vector<int>& parts, int r) {
            return from_partition(refined_franklin_inv(to_partition(parts), r));
        },
        py::arg("parts"), py::arg("r"));
    m.def(
        "fu_tang",
        [](const std::vector<int>& parts) { return from_partition(fu_tang(to_partition(parts))); },
        py::arg("parts"));
    m.def(
        "fu_tang_inv",
        [](const std::vector<int>& parts) { return from_partition(fu_tang_inv(to_partition(parts))); },
        py::arg("parts"));

    // ---- counting oracles ----
    m.def(
        "franklin_counts",
        [](long long n, int r, int j) {
            const auto [o, d] = franklin_counts(n, r, j);
            return py::make_tuple(to_py(o), to_py(d));
        },
        py::arg("n"), py::arg("r"), py::arg("j"));
    m.def(
        "refined_counts",
        [](long long n, int r, int u) {
            const auto [alpha, beta] = refined_counts(n, r, u);
            return py::make_tuple(to_py(alpha), to_py(beta));
        },
        py::arg("n"), py::arg("r"), py::arg("u"));
    m.def(
        "beck_totals",
        [](long long n) {
            const BeckTotals totals = beck_totals(n);
            py::dict result;
            result["a"] = to_py(totals.a);
            result["b"] = to_py(totals.b);
            result["o21"] = to_py(totals.o21);
            result["d21"] = to_py(totals.d21);
            return result;
        },
        py::arg("n"));
    m.def(
        "perimeter_table",
        [](int m, int threads) {
            const PerimeterTable table = perimeter_table(m, threads);
            py::dict result;
            result["m"] = table.m;
            result["g"] = to_py(table.g);
            result["h"] = to_py(table.h);
            result["g1"] = to_py(table.g1);
            result["h1"] = to_py(table.h1);
            result["index_sum"] = to_py(table.index_sum);
            result["g1_no_one"] = to_py(table.g1_no_one);
            py::dict t_row;
            for (const auto& [size, count] : table.t_row) t_row[py::int_(size)] = to_py(count);
            result["t_row"] = t_row;
            return result;
        },
        py::arg("m"), py::arg("threads") = 1);
    m.def(
        "regular_perimeter_counts",
        [](int m, int r, std::optional<int> d) {
            const auto counts = regular_perimeter_counts(m, r, d);
            py::dict result;
            result["g_r"] = to_py(counts.g_r);
            result["h_r"] = to_py(counts.h_r);
            result["g_r_d"] = counts.g_r_d ? py::object(to_py(*counts.g_r_d)) : py::object(py::none());
            return result;
        },
        py::arg("m"), py::arg("r"), py::arg("d") = py::none());

    // ---- series, closed forms, q-polynomials ----
    m.def(
        "series_coeffs",
        [](const std::string& name, int terms, std::optional<int> r, std::optional<int> d) {
            return from_big_vector(series_coeffs(gf_catalog(name, r, d), terms));
        },
        py::arg("name"), py::arg("terms"), py::kw_only(), py::arg("r") = py::none(),
        py::arg("d") = py::none(),
        "c_1..c_terms of a catalog series: g, h, g1, h1, g_minus_h, h_r, g_r, g_r_d.");
    m.def(
        "closed_form", [](const std::string& name, int m) { return to_py(closed_form(name, m)); },
        py::arg("name"), py::arg("m"), "Exact binomial sums: g, h, g1, index_sum.");
    m.def(
        "recurrence_step",
        [](const std::string& name, const py::int_& prev2, const py::int_& prev1, int m) {
            return to_py(recurrence_step(name, to_big(prev2), to_big(prev1), m));
        },
        py::arg("name"), py::arg("prev2"), py::arg("prev1"), py::arg("m"));
    m.def(
        "fib_convolution",
        [](const std::string& name, int m) { return to_py(fib_convolution(name, m)); },
        py::arg("name"), py::arg("m"), "cfib1..cfib4.");
    m.def(
        "q_binomial",
        [](int m, int j, int base) { return from_big_vector(q_binomial(m, j, base).coeffs()); },
        py::arg("m"), py::arg("j"), py::arg("base") = 1,
        "Coefficient list of the Gaussian binomial [m over j] in q^base.");
    m.def(
        "perimeter_q_row", [](int m) { return from_big_vector(perimeter_q_row(m).coeffs()); },
        py::arg("m"), "Coefficient list of q^M sum_j [M-1 over j]_q; entry n is t_n(M).");

    // ---- verification ----
    m.def(
        "verify_franklin",
        [](int n_max, const std::vector<int>& r_set, int j_max) {
            return report_dict(verify_franklin(n_max, r_set, j_max));
        },
        py::arg("n_max") = 35, py::arg("r_set") = std::vector<int>{2, 3, 4, 5}, py::arg("j_max") = 6);
    m.def(
        "verify_theorem1",
        [](int n_max, const std::vector<int>& r_set) { return report_dict(verify_theorem1(n_max, r_set)); },
        py::arg("n_max") = 25, py::arg("r_set") = std::vector<int>{2, 3, 4, 5});
    m.def(
        "verify_beck", [](int n_max) { return report_dict(verify_beck(n_max)); }, py::arg("n_max") = 50);
    m.def(
        "verify_perimeter",
        [](int m_max_enum, int m_max_series, int threads) {
            return report_dict(verify_perimeter(m_max_enum, m_max_series, threads));
        },
        py::arg("m_max_enum") = 16, py::arg("m_max_series") = 200, py::arg("threads") = 1);
    m.def(
        "conjecture_scan",
        [](int r, int m_max, int cross_check_max) {
            const ConjectureScan scan = conjecture_scan(r, m_max, cross_check_max);
            py::dict result;
            result["r"] = scan.r;
            result["m_max"] = scan.m_max;
            result["g_values"] = from_big_vector(scan.g_values);
            result["h_values"] = from_big_vector(scan.h_values);
            result["margins"] = from_big_vector(scan.margins);
            result["first_violation"] =
                scan.first_violation ? py::object(py::int_(*scan.first_violation)) : py::object(py::none());
            result["first_strict_gap"] = scan.first_strict_gap
                                             ? py::object(py::int_(*scan.first_strict_gap))
                                             : py::object(py::none());
            return result;
        },
        py::arg("r"), py::arg("m_max"), py::arg("cross_check_max") = 16);
}
