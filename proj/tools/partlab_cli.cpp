// partlab command-line tool: enumeration, bijections, counting tables,
// generating-function expansion, identity verification and the
// fixed-perimeter inequality scan, with line-delimited JSON, CSV or
// plain output.
//
// Exit codes: 0 success, 1 verification failure / inequality violation,
// 2 usage or precondition error.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partlab/bijections.hpp"
#include "partlab/counting.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/fibonacci.hpp"
#include "partlab/partition.hpp"
#include "partlab/poly.hpp"
#include "partlab/series.hpp"
#include "partlab/verify.hpp"

using json = nlohmann::ordered_json;
using namespace partlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string escaped = "\"";
    for (char c : cell) {
        if (c == '"') escaped += '"';
        escaped += c;
    }
    escaped += '"';
    return escaped;
}

std::string flatten(const json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_null()) return "";
    if (value.is_array()) {
        std::string joined;
        for (const auto& item : value) {
            if (!joined.empty()) joined += ',';
            joined += flatten(item);
        }
        return joined;
    }
    if (value.is_object()) {
        std::string joined;
        for (const auto& [key, item] : value.items()) {
            if (!joined.empty()) joined += ';';
            joined += key + "=" + flatten(item);
        }
        return joined;
    }
    return value.dump();
}

// One record per output line. JSON keeps the insertion order of fields;
// CSV prints a header for the first record of each shape; plain prints
// the caller-chosen essential value.
class Emitter {
public:
    explicit Emitter(std::string format) : format_(std::move(format)) {}

    void emit(const json& record, const std::string& plain) {
        if (format_ == "plain") {
            std::cout << plain << '\n';
            return;
        }
        if (format_ == "csv") {
            std::string header;
            std::string row;
            for (const auto& [key, value] : record.items()) {
                if (!header.empty()) {
                    header += ',';
                    row += ',';
                }
                header += csv_escape(key);
                row += csv_escape(flatten(value));
            }
            if (header != last_csv_header_) {
                std::cout << header << '\n';
                last_csv_header_ = header;
            }
            std::cout << row << '\n';
            return;
        }
        std::cout << record.dump() << '\n';
    }

private:
    std::string format_;
    std::string last_csv_header_;
};

json big_array(const std::vector<BigInt>& values) {
    json array = json::array();
    for (const auto& v : values) array.push_back(v.str());
    return array;
}

std::string join_big(const std::vector<BigInt>& values) {
    std::string joined;
    for (const auto& v : values) {
        if (!joined.empty()) joined += ',';
        joined += v.str();
    }
    return joined;
}

struct EnumerateArgs {
    std::optional<long long> size;
    std::optional<int> perimeter;
    bool odd = false;
    bool distinct = false;
    std::optional<int> regular;
    std::optional<int> mult_below;
    std::vector<int> mod;  // R,D
    bool no_ones = false;
    std::optional<long long> size_eq;
};

ConstraintSpec build_constraints(const EnumerateArgs& args) {
    ConstraintSpec spec;
    if (args.odd) spec.odd();
    if (args.distinct) spec.distinct();
    if (args.regular) spec.regular(*args.regular);
    if (args.mult_below) spec.multiplicity_below(*args.mult_below);
    if (!args.mod.empty()) {
        if (args.mod.size() != 2) throw std::invalid_argument("--mod expects R,D");
        spec.congruent_to(args.mod[1], args.mod[0]);
    }
    if (args.no_ones) spec.no_ones();
    if (args.size_eq) spec.size_equals(*args.size_eq);
    return spec;
}

int run_enumerate(const EnumerateArgs& args, Emitter& emitter) {
    const ConstraintSpec spec = build_constraints(args);
    auto emit_partition = [&](const Partition& p) {
        json record;
        record["command"] = "enumerate";
        if (args.size) record["size_selector"] = *args.size;
        if (args.perimeter) record["perimeter_selector"] = *args.perimeter;
        record["constraints"] = spec.describe();
        record["partition"] = p.to_string();
        record["size"] = p.size();
        record["length"] = p.length();
        record["perimeter"] = p.perimeter();
        emitter.emit(record, p.to_string());
    };
    if (args.size) {
        for (const Partition& p : SizeRange(*args.size, spec)) emit_partition(p);
    } else {
        for (const Partition& p : PerimeterRange(*args.perimeter, spec)) emit_partition(p);
    }
    return kExitOk;
}

int run_map(const std::string& name, bool inverse, std::optional<int> r,
            const std::string& partition_text, Emitter& emitter) {
    const Partition input = Partition::parse(partition_text);
    Partition output;
    if (name == "glaisher" || name == "theorem1") {
        if (!r) throw std::invalid_argument("map --name " + name + " requires --r");
        if (name == "glaisher") {
            output = inverse ? glaisher_inv(input, *r) : glaisher(input, *r);
        } else {
            output = inverse ? refined_franklin_inv(input, *r) : refined_franklin(input, *r);
        }
    } else if (name == "futang") {
        output = inverse ? fu_tang_inv(input) : fu_tang(input);
    } else {
        throw std::invalid_argument("unknown map '" + name + "'");
    }
    json record;
    record["command"] = "map";
    record["name"] = name;
    record["inverse"] = inverse;
    if (r) record["r"] = *r;
    record["input"] = input.to_string();
    record["output"] = output.to_string();
    emitter.emit(record, output.to_string());
    return kExitOk;
}

struct CountArgs {
    std::vector<long long> franklin;  // N R J
    std::vector<long long> refined;   // N R U
    std::optional<long long> beck;
    std::optional<int> perimeter;
    std::vector<long long> regular;  // M R [D]
};

int run_count(const CountArgs& args, int threads, Emitter& emitter) {
    json record;
    record["command"] = "count";
    if (!args.franklin.empty()) {
        const auto [o, d] = franklin_counts(args.franklin[0], static_cast<int>(args.franklin[1]),
                                            static_cast<int>(args.franklin[2]));
        record["kind"] = "franklin";
        record["n"] = args.franklin[0];
        record["r"] = args.franklin[1];
        record["j"] = args.franklin[2];
        record["o_count"] = o.str();
        record["d_count"] = d.str();
        emitter.emit(record, o.str() + " " + d.str());
    } else if (!args.refined.empty()) {
        const auto [alpha, beta] = refined_counts(args.refined[0], static_cast<int>(args.refined[1]),
                                                  static_cast<int>(args.refined[2]));
        record["kind"] = "refined";
        record["n"] = args.refined[0];
        record["r"] = args.refined[1];
        record["u"] = args.refined[2];
        record["alpha"] = alpha.str();
        record["beta"] = beta.str();
        emitter.emit(record, alpha.str() + " " + beta.str());
    } else if (args.beck) {
        const BeckTotals totals = beck_totals(*args.beck);
        record["kind"] = "beck";
        record["n"] = *args.beck;
        record["a"] = totals.a.str();
        record["b"] = totals.b.str();
        record["o21"] = totals.o21.str();
        record["d21"] = totals.d21.str();
        emitter.emit(record, totals.a.str() + " " + totals.b.str() + " " + totals.o21.str() + " " +
                                 totals.d21.str());
    } else if (args.perimeter) {
        const PerimeterTable table = perimeter_table(*args.perimeter, threads);
        record["kind"] = "perimeter";
        record["m"] = table.m;
        record["g"] = table.g.str();
        record["h"] = table.h.str();
        record["g1"] = table.g1.str();
        record["h1"] = table.h1.str();
        record["index_sum"] = table.index_sum.str();
        record["g1_no_one"] = table.g1_no_one.str();
        json t_row = json::object();
        for (const auto& [size, count] : table.t_row) t_row[std::to_string(size)] = count.str();
        record["t_row"] = t_row;
        std::ostringstream plain;
        plain << "g=" << table.g << " h=" << table.h << " g1=" << table.g1 << " h1=" << table.h1
              << " index_sum=" << table.index_sum << " g1_no_one=" << table.g1_no_one;
        for (const auto& [size, count] : table.t_row) plain << " t[" << size << "]=" << count;
        emitter.emit(record, plain.str());
    } else if (!args.regular.empty()) {
        if (args.regular.size() < 2) throw std::invalid_argument("--regular expects M R [D]");
        std::optional<int> d;
        if (args.regular.size() > 2) d = static_cast<int>(args.regular[2]);
        const auto counts = regular_perimeter_counts(static_cast<int>(args.regular[0]),
                                                     static_cast<int>(args.regular[1]), d);
        record["kind"] = "regular";
        record["m"] = args.regular[0];
        record["r"] = args.regular[1];
        if (d) record["d"] = *d;
        record["g_r"] = counts.g_r.str();
        record["h_r"] = counts.h_r.str();
        if (counts.g_r_d) record["g_r_d"] = counts.g_r_d->str();
        std::string plain = counts.g_r.str() + " " + counts.h_r.str();
        if (counts.g_r_d) plain += " " + counts.g_r_d->str();
        emitter.emit(record, plain);
    } else {
        throw std::invalid_argument(
            "count requires one of --franklin, --refined, --beck, --perimeter, --regular");
    }
    return kExitOk;
}

int run_series(const std::string& name, std::optional<int> r, std::optional<int> d, int terms,
               Emitter& emitter) {
    const RationalSeries series = gf_catalog(name, r, d);
    const auto values = series_coeffs(series, terms);
    json record;
    record["command"] = "series";
    record["name"] = name;
    if (r) record["r"] = *r;
    if (d) record["d"] = *d;
    record["terms"] = terms;
    record["values"] = big_array(values);
    emitter.emit(record, join_big(values));
    return kExitOk;
}

int run_formula(const std::string& name, int m, std::optional<long long> prev2,
                std::optional<long long> prev1, Emitter& emitter) {
    BigInt value;
    if (name == "fib") {
        value = fibonacci(m);
    } else if (name.rfind("cfib", 0) == 0) {
        value = fib_convolution(name, m);
    } else if (name.rfind("rec:", 0) == 0) {
        if (!prev2 || !prev1)
            throw std::invalid_argument("formula --name " + name + " requires --prev2 and --prev1");
        value = recurrence_step(name.substr(4), BigInt(*prev2), BigInt(*prev1), m);
    } else {
        value = closed_form(name, m);
    }
    json record;
    record["command"] = "formula";
    record["name"] = name;
    record["m"] = m;
    if (prev2) record["prev2"] = *prev2;
    if (prev1) record["prev1"] = *prev1;
    record["value"] = value.str();
    emitter.emit(record, value.str());
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    int n_max_franklin = 35;
    int n_max_theorem1 = 25;
    int n_max_beck = 50;
    std::vector<int> r_set{2, 3, 4, 5};
    int j_max = 6;
    int m_enum = 16;
    int m_series = 200;
};

int run_verify(const VerifyArgs& args, int threads, Emitter& emitter) {
    std::vector<VerificationReport> reports;
    if (args.suite == "all" || args.suite == "franklin")
        reports.push_back(verify_franklin(args.n_max_franklin, args.r_set, args.j_max));
    if (args.suite == "all" || args.suite == "theorem1")
        reports.push_back(verify_theorem1(args.n_max_theorem1, args.r_set));
    if (args.suite == "all" || args.suite == "beck") reports.push_back(verify_beck(args.n_max_beck));
    if (args.suite == "all" || args.suite == "perimeter")
        reports.push_back(verify_perimeter(args.m_enum, args.m_series, threads));
    if (reports.empty()) throw std::invalid_argument("unknown suite '" + args.suite + "'");

    bool all_pass = true;
    for (const VerificationReport& report : reports) {
        json record;
        record["command"] = "verify";
        record["check"] = report.check;
        record["grid"] = report.grid;
        record["status"] = report.pass() ? "pass" : "fail";
        record["witnesses"] = report.witnesses;
        record["failures"] = report.failures;
        if (report.first_counterexample) {
            record["counterexample"] = {{"params", report.first_counterexample->params},
                                        {"lhs", report.first_counterexample->lhs},
                                        {"rhs", report.first_counterexample->rhs}};
        }
        std::ostringstream plain;
        plain << report.check << " " << (report.pass() ? "pass" : "fail")
              << " witnesses=" << report.witnesses << " failures=" << report.failures;
        if (report.first_counterexample) plain << " first=" << report.first_counterexample->params;
        emitter.emit(record, plain.str());
        all_pass = all_pass && report.pass();
    }
    return all_pass ? kExitOk : kExitVerificationFailure;
}

int run_conjecture(int r, int m_max, Emitter& emitter) {
    const ConjectureScan scan = conjecture_scan(r, m_max);
    for (int m = 1; m <= scan.m_max; ++m) {
        json record;
        record["command"] = "conjecture";
        record["r"] = scan.r;
        record["m"] = m;
        record["g_r"] = scan.g_values[m - 1].str();
        record["h_r"] = scan.h_values[m - 1].str();
        record["margin"] = scan.margins[m - 1].str();
        emitter.emit(record, std::to_string(m) + " " + scan.g_values[m - 1].str() + " " +
                                 scan.h_values[m - 1].str() + " " + scan.margins[m - 1].str());
    }
    json summary;
    summary["command"] = "conjecture";
    summary["r"] = scan.r;
    summary["summary"] = true;
    summary["m_max"] = scan.m_max;
    summary["first_violation"] =
        scan.first_violation ? json(*scan.first_violation) : json(nullptr);
    summary["first_strict_gap"] =
        scan.first_strict_gap ? json(*scan.first_strict_gap) : json(nullptr);
    std::ostringstream plain;
    plain << "first_violation=" << (scan.first_violation ? std::to_string(*scan.first_violation) : "-")
          << " first_strict_gap="
          << (scan.first_strict_gap ? std::to_string(*scan.first_strict_gap) : "-");
    emitter.emit(summary, plain.str());
    return scan.first_violation ? kExitVerificationFailure : kExitOk;
}

int run_inspect(const std::optional<std::string>& partition_text,
                const std::optional<std::string>& profile_text, Emitter& emitter) {
    if (partition_text.has_value() == profile_text.has_value())
        throw std::invalid_argument("inspect requires exactly one of --partition, --profile");
    Partition p;
    if (partition_text) {
        p = Partition::parse(*partition_text);
    } else {
        p = from_profile(ProfileWord::parse(*profile_text));
    }
    const ProfileWord word = to_profile(p);
    json record;
    record["command"] = "inspect";
    record["partition"] = p.to_string();
    record["profile"] = word.to_string();
    record["size"] = p.size();
    record["length"] = p.length();
    record["perimeter"] = p.perimeter();
    record["m2_index"] = p.empty() ? json(nullptr) : json(m2_index(p));
    emitter.emit(record, partition_text ? word.to_string() : p.to_string());
    return kExitOk;
}

struct PolyArgs {
    std::vector<int> q_binomial;  // M J [BASE]
    std::optional<int> perimeter_row;
};

int run_poly(const PolyArgs& args, Emitter& emitter) {
    json record;
    record["command"] = "poly";
    IntPoly poly;
    if (!args.q_binomial.empty()) {
        if (args.q_binomial.size() < 2) throw std::invalid_argument("--q-binomial expects M J [BASE]");
        const int base = args.q_binomial.size() > 2 ? args.q_binomial[2] : 1;
        poly = q_binomial(args.q_binomial[0], args.q_binomial[1], base);
        record["kind"] = "q_binomial";
        record["m"] = args.q_binomial[0];
        record["j"] = args.q_binomial[1];
        record["base"] = base;
    } else if (args.perimeter_row) {
        poly = perimeter_q_row(*args.perimeter_row);
        record["kind"] = "perimeter_q_row";
        record["m"] = *args.perimeter_row;
    } else {
        throw std::invalid_argument("poly requires one of --q-binomial, --perimeter-row");
    }
    record["degree"] = poly.degree();
    record["coefficients"] = big_array(poly.coeffs());
    emitter.emit(record, join_big(poly.coeffs()));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition identities: enumeration, bijections, series, verification"};
    app.require_subcommand(1);

    auto add_command = [&app](const std::string& name, const std::string& description) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->fallthrough();
        return sub;
    };

    std::string format = "json";
    bool no_footer = false;
    int threads = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    app.add_flag("--no-footer", no_footer, "suppress the elapsed-time footer");
    app.add_option("--threads", threads, "internal parallelism cap")->check(CLI::PositiveNumber);

    // enumerate
    EnumerateArgs enum_args;
    auto* enumerate = add_command("enumerate", "list partitions of a size or perimeter");
    auto* size_opt = enumerate->add_option("--size", enum_args.size, "enumerate partitions of this size");
    auto* peri_opt =
        enumerate->add_option("--perimeter", enum_args.perimeter, "enumerate partitions of this perimeter");
    size_opt->excludes(peri_opt);
    enumerate->add_flag("--odd", enum_args.odd, "all parts odd");
    enumerate->add_flag("--distinct", enum_args.distinct, "all parts distinct");
    enumerate->add_option("--regular", enum_args.regular, "no part divisible by R");
    enumerate->add_option("--mult-below", enum_args.mult_below, "every multiplicity below R");
    enumerate->add_option("--mod", enum_args.mod, "parts congruent to D mod R, as R,D")
        ->delimiter(',')
        ->expected(1, 2);
    enumerate->add_flag("--no-ones", enum_args.no_ones, "no part equal to 1");
    enumerate->add_option("--size-eq", enum_args.size_eq, "restrict to partitions of this size");

    // map
    std::string map_name;
    bool map_inverse = false;
    std::optional<int> map_r;
    std::string map_partition;
    auto* map_cmd = add_command("map", "apply a bijection to a partition");
    map_cmd->add_option("--name", map_name, "glaisher | theorem1 | futang")->required();
    map_cmd->add_flag("--inverse", map_inverse, "apply the inverse map");
    map_cmd->add_option("--r", map_r, "modulus for glaisher/theorem1");
    map_cmd->add_option("--partition", map_partition, "input partition, largest part first")->required();

    // count
    CountArgs count_args;
    auto* count_cmd = add_command("count", "exact counting oracles");
    count_cmd->add_option("--franklin", count_args.franklin, "N R J")->expected(3);
    count_cmd->add_option("--refined", count_args.refined, "N R U")->expected(3);
    count_cmd->add_option("--beck", count_args.beck, "N");
    count_cmd->add_option("--perimeter", count_args.perimeter, "M");
    count_cmd->add_option("--regular", count_args.regular, "M R [D]")->expected(2, 3);

    // series
    std::string series_name;
    std::optional<int> series_r, series_d;
    int series_terms = 8;
    auto* series_cmd = add_command("series", "expand a catalog generating function");
    series_cmd->add_option("--name", series_name, "g|h|g1|h1|g_minus_h|h_r|g_r|g_r_d")->required();
    series_cmd->add_option("--r", series_r, "modulus for h_r/g_r/g_r_d");
    series_cmd->add_option("--d", series_d, "residue for g_r_d");
    series_cmd->add_option("--terms", series_terms, "number of coefficients")->check(CLI::PositiveNumber);

    // formula
    std::string formula_name;
    int formula_m = 1;
    std::optional<long long> formula_prev2, formula_prev1;
    auto* formula_cmd = add_command("formula", "evaluate a closed form");
    formula_cmd
        ->add_option("--name", formula_name,
                     "g|h|g1|index_sum|cfib1..4|fib|rec:g|rec:h|rec:g1|rec:h1")
        ->required();
    formula_cmd->add_option("--m", formula_m, "sequence index M")->required();
    formula_cmd->add_option("--prev2", formula_prev2, "f(M-2), for rec:* names");
    formula_cmd->add_option("--prev1", formula_prev1, "f(M-1), for rec:* names");

    // verify
    VerifyArgs verify_args;
    auto* verify_cmd = add_command("verify", "run identity verification suites");
    verify_cmd->add_option("--suite", verify_args.suite, "all|franklin|theorem1|beck|perimeter")
        ->capture_default_str();
    verify_cmd->add_option("--n-max", verify_args.n_max_franklin, "size bound for franklin");
    verify_cmd->add_option("--n-max-theorem1", verify_args.n_max_theorem1, "size bound for theorem1");
    verify_cmd->add_option("--n-max-beck", verify_args.n_max_beck, "size bound for beck");
    verify_cmd->add_option("--r-set", verify_args.r_set, "moduli grid")->delimiter(',');
    verify_cmd->add_option("--j-max", verify_args.j_max, "class-count bound for franklin");
    verify_cmd->add_option("--m-enum", verify_args.m_enum, "exhaustive perimeter bound");
    verify_cmd->add_option("--m-series", verify_args.m_series, "formula-route perimeter bound");

    // conjecture
    int conjecture_r = 3;
    int conjecture_m_max = 100;
    auto* conjecture_cmd = add_command("conjecture", "scan h_r(M) - g_r(M) margins");
    conjecture_cmd->add_option("--r", conjecture_r, "modulus")->required();
    conjecture_cmd->add_option("--m-max", conjecture_m_max, "perimeter bound")->required();

    // inspect
    std::optional<std::string> inspect_partition, inspect_profile;
    auto* inspect_cmd = add_command("inspect", "statistics and profile word of one partition");
    inspect_cmd->add_option("--partition", inspect_partition, "partition, largest part first");
    inspect_cmd->add_option("--profile", inspect_profile, "0/1 profile word");

    // poly
    PolyArgs poly_args;
    auto* poly_cmd = add_command("poly", "exact q-polynomials");
    poly_cmd->add_option("--q-binomial", poly_args.q_binomial, "M J [BASE]")->expected(2, 3);
    poly_cmd->add_option("--perimeter-row", poly_args.perimeter_row, "M");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    Emitter emitter(format);
    int exit_code = kExitOk;
    try {
        if (enumerate->parsed()) {
            if (!enum_args.size && !enum_args.perimeter)
                throw std::invalid_argument("enumerate requires --size or --perimeter");
            exit_code = run_enumerate(enum_args, emitter);
        } else if (map_cmd->parsed()) {
            exit_code = run_map(map_name, map_inverse, map_r, map_partition, emitter);
        } else if (count_cmd->parsed()) {
            exit_code = run_count(count_args, threads, emitter);
        } else if (series_cmd->parsed()) {
            exit_code = run_series(series_name, series_r, series_d, series_terms, emitter);
        } else if (formula_cmd->parsed()) {
            exit_code = run_formula(formula_name, formula_m, formula_prev2, formula_prev1, emitter);
        } else if (verify_cmd->parsed()) {
            exit_code = run_verify(verify_args, threads, emitter);
        } else if (conjecture_cmd->parsed()) {
            exit_code = run_conjecture(conjecture_r, conjecture_m_max, emitter);
        } else if (inspect_cmd->parsed()) {
            exit_code = run_inspect(inspect_partition, inspect_profile, emitter);
        } else if (poly_cmd->parsed()) {
            exit_code = run_poly(poly_args, emitter);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (!no_footer) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cerr << "# elapsed_ms=" << ms << '\n';
    }
    return exit_code;
}
