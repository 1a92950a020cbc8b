#pragma once

// Timing harness: warmup, then repeated timed calls per (algorithm, n, k)
// cell on a monotonic clock, summarized as total/mean/median/min nanoseconds.
//
// Calls are timed in chunks (up to kChunkSize calls per clock pair) because a
// single maxnim call at small n is below the clock's useful resolution. The
// median and min are taken over per-chunk averages.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "instance.hpp"
#include "survivor.hpp"

namespace josephus::bench {

using Clock = std::chrono::steady_clock;
static_assert(Clock::is_steady);

inline constexpr std::uint64_t kChunkSize = 100;

struct BenchConfig {
    std::vector<Label> n_values;
    std::vector<Label> k_values;
    std::vector<Algorithm> algorithms{Algorithm::maxnim, Algorithm::linear, Algorithm::block};
    std::uint64_t repetitions = 3000;
    std::uint64_t warmup = 100;
    /// Per-cell wall-clock cap covering warmup and timed calls.
    std::optional<std::chrono::nanoseconds> time_budget = std::chrono::seconds(10);
};

struct BenchRecord {
    Algorithm algorithm = Algorithm::maxnim;
    Label n = 0;
    Label k = 0;
    std::uint64_t repetitions = 0;
    std::uint64_t total_ns = 0;
    std::uint64_t mean_ns = 0;
    std::uint64_t median_ns = 0;
    std::uint64_t min_ns = 0;
    Label survivor = 0;  // 1-indexed, from the final call
    bool truncated = false;
    std::optional<std::string> error;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

namespace detail {

// Keeps the optimizer from hoisting the pure survivor call out of the loop.
template <class T>
inline void clobber(T& value) noexcept {
    asm volatile("" : "+m"(value) : : "memory");
}

template <class T>
inline void keep(const T& value) noexcept {
    asm volatile("" : : "r"(value) : "memory");
}

inline std::uint64_t to_ns(Clock::duration d) noexcept {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(d).count());
}

inline Label call_once(const JosephusInstance& instance, Algorithm algorithm) {
    JosephusInstance local = instance;
    clobber(local);
    const Label s = survivor(local, algorithm).one_indexed();
    keep(s);
    return s;
}

inline BenchRecord measure_cell(const BenchConfig& config, Algorithm algorithm, Label n, Label k) {
    BenchRecord record;
    record.algorithm = algorithm;
    record.n = n;
    record.k = k;

    std::optional<JosephusInstance> instance;
    try {
        instance.emplace(n, k);
    } catch (const std::exception& e) {
        record.error = e.what();
        return record;
    }

    const auto cell_start = Clock::now();
    const auto over_budget = [&](double fraction) {
        return config.time_budget &&
               Clock::now() - cell_start >=
                   std::chrono::duration_cast<Clock::duration>(*config.time_budget * fraction);
    };

    // Warmup may use a tenth of the budget.
    std::uint64_t warmed = 0;
    for (; warmed < config.warmup && !over_budget(0.1); ++warmed) call_once(*instance, algorithm);

    // Shrink chunks for slow calls so the budget is checked often enough.
    std::uint64_t chunk = kChunkSize;
    {
        const auto t0 = Clock::now();
        record.survivor = call_once(*instance, algorithm);
        const std::uint64_t probe_ns = std::max<std::uint64_t>(to_ns(Clock::now() - t0), 1);
        chunk = std::clamp<std::uint64_t>(1'000'000 / probe_ns, 1, kChunkSize);
    }

    std::vector<std::uint64_t> per_call;
    per_call.reserve(config.repetitions / chunk + 1);
    const auto batch_start = Clock::now();
    while (record.repetitions < config.repetitions) {
        const std::uint64_t count = std::min(chunk, config.repetitions - record.repetitions);
        const auto t0 = Clock::now();
        for (std::uint64_t i = 0; i < count; ++i) record.survivor = call_once(*instance, algorithm);
        const auto t1 = Clock::now();
        per_call.push_back(to_ns(t1 - t0) / count);
        record.repetitions += count;
        if (record.repetitions < config.repetitions && over_budget(1.0)) {
            record.truncated = true;
            break;
        }
    }
    record.total_ns = to_ns(Clock::now() - batch_start);
    record.mean_ns = record.total_ns / record.repetitions;

    auto middle = per_call.begin() + static_cast<std::ptrdiff_t>((per_call.size() - 1) / 2);
    std::nth_element(per_call.begin(), middle, per_call.end());
    record.median_ns = *middle;
    record.min_ns = *std::min_element(per_call.begin(), per_call.end());
    return record;
}

inline auto sort_key(const BenchRecord& r) { return std::make_tuple(to_string(r.algorithm), r.n, r.k); }

} // namespace detail

inline void validate(const BenchConfig& config) {
    if (config.repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");
    for (auto a : config.algorithms)
        if (a == Algorithm::oracle) throw std::invalid_argument("the oracle is not a benchmark algorithm");
    for (auto n : config.n_values)
        if (n == 0) throw std::invalid_argument("n values must be positive");
    for (auto k : config.k_values)
        if (k == 0) throw std::invalid_argument("k values must be positive");
}

/// Measures every (algorithm, n, k) cell, one at a time on the calling thread.
/// A cell whose instance is out of capacity is returned with `error` set.
[[nodiscard]] inline std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    validate(config);
    std::vector<BenchRecord> records;
    records.reserve(config.algorithms.size() * config.n_values.size() * config.k_values.size());
    for (auto algorithm : config.algorithms)
        for (auto n : config.n_values)
            for (auto k : config.k_values) records.push_back(detail::measure_cell(config, algorithm, n, k));
    return records;
}

/// (n, k) pairs where successful records disagree on the survivor.
[[nodiscard]] inline std::vector<std::pair<Label, Label>> survivor_mismatches(const std::vector<BenchRecord>& records) {
    std::map<std::pair<Label, Label>, Label> seen;
    std::vector<std::pair<Label, Label>> mismatched;
    for (const auto& r : records) {
        if (r.error) continue;
        auto [it, inserted] = seen.emplace(std::make_pair(r.n, r.k), r.survivor);
        if (!inserted && it->second != r.survivor &&
            std::find(mismatched.begin(), mismatched.end(), it->first) == mismatched.end())
            mismatched.push_back(it->first);
    }
    return mismatched;
}

inline constexpr const char* kCsvHeader = "algorithm,n,k,reps,total_ns,mean_ns,median_ns,min_ns,survivor,truncated";

/// Rows ordered by algorithm name, then n, then k.
inline void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    std::vector<const BenchRecord*> rows;
    rows.reserve(records.size());
    for (const auto& r : records) rows.push_back(&r);
    std::stable_sort(rows.begin(), rows.end(),
                     [](const BenchRecord* a, const BenchRecord* b) { return detail::sort_key(*a) < detail::sort_key(*b); });

    out << kCsvHeader << '\n';
    for (const auto* r : rows) {
        out << to_string(r->algorithm) << ',' << r->n << ',' << r->k << ',' << r->repetitions << ',' << r->total_ns
            << ',' << r->mean_ns << ',' << r->median_ns << ',' << r->min_ns << ',' << r->survivor << ','
            << (r->truncated ? 1 : 0) << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("failed to write benchmark CSV");
}

/// One JSON object per line, same fields as the CSV plus `error` when set.
inline void emit_jsonl(const std::vector<BenchRecord>& records, std::ostream& out) {
    std::vector<const BenchRecord*> rows;
    for (const auto& r : records) rows.push_back(&r);
    std::stable_sort(rows.begin(), rows.end(),
                     [](const BenchRecord* a, const BenchRecord* b) { return detail::sort_key(*a) < detail::sort_key(*b); });
    for (const auto* r : rows) {
        nlohmann::json row = {{"algorithm", to_string(r->algorithm)},
                              {"n", r->n},
                              {"k", r->k},
                              {"reps", r->repetitions},
                              {"total_ns", r->total_ns},
                              {"mean_ns", r->mean_ns},
                              {"median_ns", r->median_ns},
                              {"min_ns", r->min_ns},
                              {"survivor", r->survivor},
                              {"truncated", r->truncated}};
        if (r->error) row["error"] = *r->error;
        out << row.dump() << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("failed to write benchmark JSON lines");
}

/// Parses CSV produced by emit_csv. Throws std::runtime_error on malformed input.
[[nodiscard]] inline std::vector<BenchRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("missing benchmark CSV header");

    const auto number = [](const std::string& field) -> std::uint64_t {
        std::size_t used = 0;
        const unsigned long long value = std::stoull(field, &used);
        if (used != field.size() || field.empty() || field[0] == '-')
            throw std::runtime_error("bad integer field: " + field);
        return value;
    };

    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string field; std::getline(ss, field, ',');) fields.push_back(field);
        if (fields.size() != 10) throw std::runtime_error("expected 10 fields: " + line);
        const auto algorithm = parse_algorithm(fields[0]);
        if (!algorithm) throw std::runtime_error("unknown algorithm: " + fields[0]);

        BenchRecord r;
        r.algorithm = *algorithm;
        r.n = number(fields[1]);
        r.k = number(fields[2]);
        r.repetitions = number(fields[3]);
        r.total_ns = number(fields[4]);
        r.mean_ns = number(fields[5]);
        r.median_ns = number(fields[6]);
        r.min_ns = number(fields[7]);
        r.survivor = number(fields[8]);
        r.truncated = number(fields[9]) != 0;
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace josephus::bench
