#pragma once

// Survivor computation through the Maximum Nim step function
//
//   h_k(x) = x + floor(x / (k-1)) + 1
//
// Starting at x = k-1, h_k is applied until x >= n(k-1). The survivor
// (1-indexed) is then n*k - x. The loop needs O(k log n) iterations and a
// fixed handful of integer variables.

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "instance.hpp"

namespace josephus {

/// One application of h_k. Requires k >= 2.
[[nodiscard]] inline Label h_step(Label x, Label k) {
    if (k < 2) throw InvalidInstance("h_step requires k >= 2");
    Label result = 0;
    if (__builtin_add_overflow(x, x / (k - 1) + 1, &result))
        throw CapacityError("h_step overflows 64 bits");
    return result;
}

/// Survivor via the h_k iteration. k = 1 is answered directly (survivor n).
///
/// No allocation and no recursion. The iterate stays below n*k because the
/// survivor is at least 1, so the instance's capacity check covers the loop.
[[nodiscard]] inline SurvivorReport survivor_maxnim(const JosephusInstance& instance) noexcept {
    const Label n = instance.n();
    const Label k = instance.k();
    if (k == 1) return SurvivorReport::from_one_indexed(n, Algorithm::maxnim);

    const Label step = k - 1;
    const Label target = step * n;
    Label x = step;
    while (x < target) x += x / step + 1;
    return SurvivorReport::from_one_indexed(n * k - x, Algorithm::maxnim);
}

/// Iterates x_0 = k-1, ..., x_p of the h_k loop.
struct IterationTrace {
    std::vector<Label> xs;

    [[nodiscard]] std::size_t p() const noexcept { return xs.empty() ? 0 : xs.size() - 1; }
    [[nodiscard]] Label final_iterate() const noexcept { return xs.back(); }
};

/// Like survivor_maxnim but records every iterate. Storage grows with p.
[[nodiscard]] inline std::pair<SurvivorReport, IterationTrace>
survivor_maxnim_traced(const JosephusInstance& instance) {
    const Label n = instance.n();
    const Label k = instance.k();
    if (k < 2) throw InvalidInstance("tracing requires k >= 2");

    const Label step = k - 1;
    const Label target = step * n;
    IterationTrace trace;
    Label x = step;
    trace.xs.push_back(x);
    while (x < target) {
        x += x / step + 1;
        trace.xs.push_back(x);
    }
    return {SurvivorReport::from_one_indexed(n * k - x, Algorithm::maxnim), std::move(trace)};
}

/// Real-valued bracket on the iteration count: floor(w) <= p <= ceil(v).
struct BoundsEstimate {
    double v = 0.0;
    double w = 0.0;
    std::uint64_t ceil_v = 0;
    std::uint64_t floor_w = 0;

    [[nodiscard]] bool brackets(std::uint64_t p) const noexcept { return floor_w <= p && p <= ceil_v; }
};

namespace detail {

inline std::uint64_t to_count(double value) noexcept {
    if (!(value > 0.0)) return 0;
    if (value >= 18446744073709551615.0) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(value);
}

} // namespace detail

/// v = ln n / ln(k/(k-1)),  w = (ln(n+1) - ln 2) / ln(k/(k-1)).
///
/// Diagnostic only; the survivor loop terminates on exact integer comparison.
[[nodiscard]] inline BoundsEstimate iteration_bounds(const JosephusInstance& instance) {
    if (instance.k() < 2) throw InvalidInstance("iteration bounds require k >= 2");
    const auto n = static_cast<double>(instance.n());
    // ln k - ln(k-1) == log1p(1/(k-1)), without cancellation for large k.
    const double log_ratio = std::log1p(1.0 / static_cast<double>(instance.k() - 1));

    BoundsEstimate bounds;
    bounds.v = std::log(n) / log_ratio;
    bounds.w = (std::log(n + 1.0) - std::log(2.0)) / log_ratio;
    bounds.ceil_v = detail::to_count(std::ceil(bounds.v));
    bounds.floor_w = detail::to_count(std::floor(bounds.w));
    return bounds;
}

/// Upper bound k*ln(n) + 1 on the iteration count (n >= 2, k >= 2).
[[nodiscard]] inline double complexity_bound(const JosephusInstance& instance) noexcept {
    return static_cast<double>(instance.k()) * std::log(static_cast<double>(instance.n())) + 1.0;
}

} // namespace josephus
