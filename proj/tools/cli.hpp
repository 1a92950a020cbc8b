#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification or bracket
// failure, 2 usage/validation error. Data goes to `out`, diagnostics to `err`.

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "josephus/josephus.hpp"

namespace josephus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Plain decimal digits only, no sign or exponent.
inline Label parse_decimal(const std::string& text, const std::string& what) {
    Label value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (text.empty() || text.front() < '0' || text.front() > '9')
        throw UsageError(what + " must be a decimal integer, got '" + text + "'");
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw UsageError(what + " does not fit in 64 bits: " + text);
    if (ec != std::errc() || ptr != last) throw UsageError(what + " must be a decimal integer, got '" + text + "'");
    return value;
}

inline std::vector<Label> parse_list(const std::vector<std::string>& items, const std::string& what) {
    std::vector<Label> values;
    values.reserve(items.size());
    for (const auto& item : items) values.push_back(parse_decimal(item, what));
    return values;
}

namespace detail {

struct InstanceArgs {
    std::string n;
    std::string k;

    void attach(CLI::App& command) {
        command.add_option("--n", n, "number of labels (decimal)")->required();
        command.add_option("--k", k, "removal step (decimal)")->required();
    }
    [[nodiscard]] JosephusInstance instance() const {
        return JosephusInstance(parse_decimal(n, "--n"), parse_decimal(k, "--k"));
    }
};

inline void print_report_failures(const VerificationReport& report, std::ostream& err) {
    for (const auto& f : report.failures) {
        err << "mismatch n=" << f.n << " k=" << f.k << " expected=" << f.expected;
        for (const auto& [algorithm, s] : f.survivors) err << ' ' << to_string(algorithm) << '=' << s;
        err << '\n';
    }
    for (const auto& v : report.bound_violations) {
        err << (v.kind == BoundKind::bracket ? "bracket" : "complexity") << " violation n=" << v.n << " k=" << v.k
            << " p=" << v.p << " floor_w=" << v.floor_w << " ceil_v=" << v.ceil_v << '\n';
    }
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Josephus problem survivor toolkit", "josephus"};
    app.require_subcommand(1);

    detail::InstanceArgs solve_args;
    std::string solve_alg = "maxnim";
    std::string solve_index = "one";
    auto* solve = app.add_subcommand("solve", "print the surviving label");
    solve_args.attach(*solve);
    solve->add_option("--alg", solve_alg, "maxnim, linear, block or oracle")
        ->check(CLI::IsMember({"maxnim", "linear", "block", "oracle"}));
    solve->add_option("--index", solve_index, "label convention: one or zero")->check(CLI::IsMember({"one", "zero"}));

    detail::InstanceArgs trace_args;
    auto* trace = app.add_subcommand("trace", "print the h_k iterates, p and the survivor");
    trace_args.attach(*trace);

    detail::InstanceArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "print the iteration-count bracket and the actual p");
    bounds_args.attach(*bounds);

    detail::InstanceArgs order_args;
    auto* order = app.add_subcommand("order", "print the full elimination order");
    order_args.attach(*order);

    std::string n_max = "200", k_max = "64", samples = "0", n_limit = "10000000000", k_limit = "50", seed = "42";
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "cross-check all algorithms and the iteration bounds");
    verify->add_option("--n-max", n_max, "exhaustive grid n range 1..n-max")->capture_default_str();
    verify->add_option("--k-max", k_max, "exhaustive grid k range 1..k-max")->capture_default_str();
    verify->add_option("--samples", samples, "random large instances (maxnim vs block)")->capture_default_str();
    verify->add_option("--n-limit", n_limit, "random n upper limit")->capture_default_str();
    verify->add_option("--k-limit", k_limit, "random k upper limit")->capture_default_str();
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_flag("--json", verify_json, "print the full report as JSON");

    std::vector<std::string> n_list, k_list;
    std::vector<std::string> alg_list{"maxnim", "linear", "block"};
    std::string reps = "3000", warmup = "100", budget_ms = "10000", out_path, format = "csv";
    auto* bench_cmd = app.add_subcommand("bench", "time the algorithms over an n x k grid");
    bench_cmd->add_option("--n-list", n_list, "comma-separated n values")->required()->delimiter(',');
    bench_cmd->add_option("--k-list", k_list, "comma-separated k values")->required()->delimiter(',');
    bench_cmd->add_option("--alg-list", alg_list, "comma-separated algorithms")
        ->delimiter(',')
        ->check(CLI::IsMember({"maxnim", "linear", "block"}));
    bench_cmd->add_option("--reps", reps, "timed repetitions per cell")->capture_default_str();
    bench_cmd->add_option("--warmup", warmup, "warmup calls per cell")->capture_default_str();
    bench_cmd->add_option("--budget-ms", budget_ms, "per-cell time budget in ms, 0 for none")->capture_default_str();
    bench_cmd->add_option("--out", out_path, "output file (default: standard output)");
    bench_cmd->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));

    std::vector<std::string> argv_storage{"josephus"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        app.exit(e, err, err);
        return kExitUsage;
    }

    try {
        if (*solve) {
            const auto instance = solve_args.instance();
            const auto report = survivor(instance, *parse_algorithm(solve_alg));
            out << (solve_index == "one" ? report.one_indexed() : report.zero_indexed()) << '\n';
            return kExitOk;
        }
        if (*trace) {
            const auto instance = trace_args.instance();
            if (instance.k() < 2) throw UsageError("trace requires k >= 2");
            const auto [report, iterates] = survivor_maxnim_traced(instance);
            for (const Label x : iterates.xs) out << x << '\n';
            out << "p=" << iterates.p() << '\n' << "survivor=" << report.one_indexed() << '\n';
            return kExitOk;
        }
        if (*bounds) {
            const auto instance = bounds_args.instance();
            if (instance.k() < 2) throw UsageError("bounds require k >= 2");
            const auto estimate = iteration_bounds(instance);
            const auto p = survivor_maxnim_traced(instance).second.p();
            out << std::fixed << std::setprecision(6) << "v=" << estimate.v << '\n'
                << "ceil_v=" << estimate.ceil_v << '\n'
                << "w=" << estimate.w << '\n'
                << "floor_w=" << estimate.floor_w << '\n'
                << "p=" << p << '\n';
            if (!estimate.brackets(p)) {
                err << "bracket violated: expected floor_w <= p <= ceil_v\n";
                return kExitFailure;
            }
            return kExitOk;
        }
        if (*order) {
            const auto elimination = oracle_simulate(order_args.instance());
            for (std::size_t i = 0; i < elimination.removed.size(); ++i)
                out << (i == 0 ? "" : ",") << elimination.removed[i];
            out << (elimination.removed.empty() ? "" : " ") << "survivor=" << elimination.survivor << '\n';
            return kExitOk;
        }
        if (*verify) {
            VerificationReport report = verify_exhaustive(parse_decimal(n_max, "--n-max"), parse_decimal(k_max, "--k-max"));
            const Label sample_count = parse_decimal(samples, "--samples");
            if (sample_count > 0)
                report = merge(std::move(report),
                               verify_random_large(sample_count, parse_decimal(n_limit, "--n-limit"),
                                                   parse_decimal(k_limit, "--k-limit"), parse_decimal(seed, "--seed")));
            if (verify_json) {
                out << to_json(report).dump(2) << '\n';
            } else if (report.passed()) {
                out << "PASS " << report.checks_run << " checks\n";
            } else {
                out << "FAIL " << report.failures.size() << " mismatches, " << report.bound_violations.size()
                    << " bound violations in " << report.checks_run << " checks\n";
            }
            detail::print_report_failures(report, err);
            return report.passed() ? kExitOk : kExitFailure;
        }
        if (*bench_cmd) {
            bench::BenchConfig config;
            config.n_values = parse_list(n_list, "--n-list");
            config.k_values = parse_list(k_list, "--k-list");
            config.algorithms.clear();
            for (const auto& name : alg_list) config.algorithms.push_back(*parse_algorithm(name));
            config.repetitions = parse_decimal(reps, "--reps");
            config.warmup = parse_decimal(warmup, "--warmup");
            const Label budget = parse_decimal(budget_ms, "--budget-ms");
            if (budget == 0)
                config.time_budget.reset();
            else
                config.time_budget = std::chrono::milliseconds(budget);
            bench::validate(config);

            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) throw UsageError("cannot open " + out_path + " for writing");
            }
            std::ostream& sink = out_path.empty() ? out : file;

            const auto records = bench::run_bench(config);
            if (format == "csv")
                bench::emit_csv(records, sink);
            else
                bench::emit_jsonl(records, sink);

            for (const auto& r : records)
                if (r.error) err << "cell " << to_string(r.algorithm) << " n=" << r.n << " k=" << r.k << ": " << *r.error << '\n';
            const auto mismatches = bench::survivor_mismatches(records);
            for (const auto& [n, k] : mismatches) err << "survivor mismatch at n=" << n << " k=" << k << '\n';
            return mismatches.empty() ? kExitOk : kExitFailure;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidInstance& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace josephus::cli
