#pragma once

// Batch cross-validation of the survivor algorithms and the iteration-count
// bounds. Disagreements are collected as data; nothing here throws on a
// mismatch.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "instance.hpp"
#include "maxnim.hpp"
#include "reference.hpp"

namespace josephus {

struct GridDescription {
    std::string mode;  // "exhaustive" or "random"
    Label n_min = 0;
    Label n_max = 0;
    Label k_min = 0;
    Label k_max = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

struct AgreementFailure {
    Label n = 0;
    Label k = 0;
    std::vector<std::pair<Algorithm, Label>> survivors;  // 1-indexed
    Label expected = 0;
};

enum class BoundKind { bracket, complexity };

struct BoundViolation {
    Label n = 0;
    Label k = 0;
    BoundKind kind = BoundKind::bracket;
    std::uint64_t p = 0;
    std::uint64_t floor_w = 0;
    std::uint64_t ceil_v = 0;
    double complexity_limit = 0.0;
};

struct VerificationReport {
    GridDescription grid;
    std::uint64_t checks_run = 0;
    std::vector<AgreementFailure> failures;
    std::vector<BoundViolation> bound_violations;

    [[nodiscard]] bool passed() const noexcept { return failures.empty() && bound_violations.empty(); }
};

/// Test hook: corrupts one algorithm's survivor at one instance.
struct FaultInjection {
    Label n = 0;
    Label k = 0;
    Algorithm algorithm = Algorithm::maxnim;
};

struct VerifyOptions {
    std::optional<FaultInjection> fault;
};

namespace detail {

inline Label apply_fault(const VerifyOptions& options, const JosephusInstance& instance, Algorithm algorithm,
                         Label survivor) noexcept {
    if (options.fault && options.fault->n == instance.n() && options.fault->k == instance.k() &&
        options.fault->algorithm == algorithm)
        return survivor + 1;
    return survivor;
}

inline void check_bounds(const JosephusInstance& instance, VerificationReport& report) {
    const std::uint64_t p = survivor_maxnim_traced(instance).second.p();
    const BoundsEstimate bounds = iteration_bounds(instance);
    if (!bounds.brackets(p))
        report.bound_violations.push_back(
            {instance.n(), instance.k(), BoundKind::bracket, p, bounds.floor_w, bounds.ceil_v, 0.0});
    if (instance.n() >= 2) {
        const double limit = complexity_bound(instance);
        if (static_cast<double>(p) > limit)
            report.bound_violations.push_back(
                {instance.n(), instance.k(), BoundKind::complexity, p, bounds.floor_w, bounds.ceil_v, limit});
    }
}

inline void compare(const JosephusInstance& instance, std::vector<std::pair<Algorithm, Label>> survivors,
                    Label expected, VerificationReport& report) {
    for (const auto& entry : survivors) {
        if (entry.second != expected) {
            report.failures.push_back({instance.n(), instance.k(), std::move(survivors), expected});
            return;
        }
    }
}

// Uniform double in [0, 1) from the top 53 bits, independent of the standard
// library's distribution implementations.
inline double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline Label uniform_in(std::mt19937_64& rng, Label lo, Label hi) {
    const Label span = hi - lo + 1;
    return span == 0 ? rng() : lo + rng() % span;
}

} // namespace detail

/// Every (n, k) with 1 <= n <= n_max, 1 <= k <= k_max: oracle, linear, block
/// and maxnim must agree; for k >= 2 the iteration count must also respect
/// floor(w) <= p <= ceil(v) and p <= k ln n + 1.
[[nodiscard]] inline VerificationReport verify_exhaustive(Label n_max, Label k_max, const VerifyOptions& options = {}) {
    if (n_max == 0 || k_max == 0) throw InvalidInstance("n_max and k_max must be at least 1");
    if (n_max > kOracleMaxN) throw InvalidInstance("n_max exceeds the oracle limit");

    VerificationReport report;
    report.grid = {"exhaustive", 1, n_max, 1, k_max, 0, 0};
    for (Label n = 1; n <= n_max; ++n) {
        for (Label k = 1; k <= k_max; ++k) {
            const JosephusInstance instance(n, k);
            const Label expected = detail::apply_fault(options, instance, Algorithm::oracle,
                                                       oracle_simulate(instance).survivor);
            std::vector<std::pair<Algorithm, Label>> survivors;
            for (auto algorithm : {Algorithm::maxnim, Algorithm::linear, Algorithm::block}) {
                Label s = 0;
                switch (algorithm) {
                case Algorithm::maxnim: s = survivor_maxnim(instance).one_indexed(); break;
                case Algorithm::linear: s = survivor_linear(instance).one_indexed(); break;
                default: s = survivor_block(instance).one_indexed(); break;
                }
                survivors.emplace_back(algorithm, detail::apply_fault(options, instance, algorithm, s));
            }
            detail::compare(instance, std::move(survivors), expected, report);
            if (k >= 2) detail::check_bounds(instance, report);
            ++report.checks_run;
        }
    }
    return report;
}

/// Seeded random instances with 2 <= k <= k_limit and k <= n <= n_limit, n
/// drawn log-uniformly. maxnim is checked against block (the oracle is too
/// slow at this scale) together with the iteration-count bounds.
[[nodiscard]] inline VerificationReport verify_random_large(std::uint64_t samples, Label n_limit, Label k_limit,
                                                            std::uint64_t seed, const VerifyOptions& options = {}) {
    if (n_limit < 2 || k_limit < 2) throw InvalidInstance("n_limit and k_limit must be at least 2");
    Label product = 0;
    if (__builtin_mul_overflow(n_limit, k_limit, &product))
        throw CapacityError("n_limit * k_limit exceeds the 64-bit range");

    const Label k_hi = std::min(k_limit, n_limit);
    VerificationReport report;
    report.grid = {"random", 2, n_limit, 2, k_hi, samples, seed};

    std::mt19937_64 rng(seed);
    const double log_hi = std::log(static_cast<double>(n_limit) + 1.0);
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Label k = detail::uniform_in(rng, 2, k_hi);
        const double log_lo = std::log(static_cast<double>(k));
        auto n = static_cast<Label>(std::exp(log_lo + detail::unit_interval(rng) * (log_hi - log_lo)));
        n = std::clamp(n, k, n_limit);

        const JosephusInstance instance(n, k);
        const Label expected =
            detail::apply_fault(options, instance, Algorithm::block, survivor_block(instance).one_indexed());
        const Label maxnim =
            detail::apply_fault(options, instance, Algorithm::maxnim, survivor_maxnim(instance).one_indexed());
        detail::compare(instance, {{Algorithm::maxnim, maxnim}}, expected, report);
        detail::check_bounds(instance, report);
        ++report.checks_run;
    }
    return report;
}

/// Concatenates two reports; the grid of the first is kept.
[[nodiscard]] inline VerificationReport merge(VerificationReport first, const VerificationReport& second) {
    first.checks_run += second.checks_run;
    first.failures.insert(first.failures.end(), second.failures.begin(), second.failures.end());
    first.bound_violations.insert(first.bound_violations.end(), second.bound_violations.begin(),
                                  second.bound_violations.end());
    return first;
}

inline nlohmann::json to_json(const VerificationReport& report) {
    using nlohmann::json;
    json failures = json::array();
    for (const auto& f : report.failures) {
        json survivors = json::object();
        for (const auto& [algorithm, s] : f.survivors) survivors[std::string(to_string(algorithm))] = s;
        failures.push_back({{"n", f.n}, {"k", f.k}, {"survivors", survivors}, {"expected", f.expected}});
    }
    json violations = json::array();
    for (const auto& v : report.bound_violations) {
        json entry = {{"n", v.n},
                      {"k", v.k},
                      {"kind", v.kind == BoundKind::bracket ? "bracket" : "complexity"},
                      {"p", v.p},
                      {"floor_w", v.floor_w},
                      {"ceil_v", v.ceil_v}};
        if (v.kind == BoundKind::complexity) entry["limit"] = v.complexity_limit;
        violations.push_back(std::move(entry));
    }
    const auto& g = report.grid;
    return {{"grid",
             {{"mode", g.mode},
              {"n_min", g.n_min},
              {"n_max", g.n_max},
              {"k_min", g.k_min},
              {"k_max", g.k_max},
              {"samples", g.samples},
              {"seed", g.seed}}},
            {"checks_run", report.checks_run},
            {"pass", report.passed()},
            {"failures", failures},
            {"bound_violations", violations}};
}

} // namespace josephus
