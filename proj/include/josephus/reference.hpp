#pragma once

// Reference survivor algorithms used as comparison baselines and ground truth.

#include <cstdint>
#include <ranges>
#include <string>
#include <vector>

#include "instance.hpp"

namespace josephus {

/// J(1) = 0, J(i) = (J(i-1) + k) mod i. O(n) time, O(1) space.
[[nodiscard]] inline SurvivorReport survivor_linear(const JosephusInstance& instance) noexcept {
    const Label n = instance.n();
    const Label k = instance.k();
    // result + k <= n + k - 1 <= n*k, so the sum never wraps.
    Label result = 0;
    for (Label i = 2; i <= n; ++i) result = (result + k) % i;
    return SurvivorReport::from_zero_indexed(result, Algorithm::linear);
}

struct BlockResult {
    SurvivorReport survivor;
    /// Recurrence applications, one per level of the original recursion.
    std::uint64_t steps = 0;
};

/// Block-removal recursion with the k-th, 2k-th, ... labels dropped in one step:
///
///   J(n) = (J(n-1) + k) mod n                               for n < k
///   r = J(n - n/k) - (n mod k);  r < 0 ? r + n : r + r/(k-1)  for n >= k
///
/// The recursion is linear, so it runs as a descent that records the n >= k
/// levels followed by an ascent that applies the transform in reverse. The
/// n < k tail is the linear recurrence and needs no stored levels.
[[nodiscard]] inline BlockResult survivor_block_counted(const JosephusInstance& instance) {
    const Label n = instance.n();
    const Label k = instance.k();
    if (n == 1) return {SurvivorReport::from_zero_indexed(0, Algorithm::block), 0};
    if (k == 1) return {SurvivorReport::from_zero_indexed(n - 1, Algorithm::block), 0};

    std::vector<Label> levels;
    Label m = n;
    while (m >= k) {
        levels.push_back(m);
        m -= m / k;
    }

    std::uint64_t steps = levels.size();
    Label result = 0;
    for (Label i = 2; i <= m; ++i, ++steps) result = (result + k) % i;

    for (const Label level : std::views::reverse(levels)) {
        const Label shift = level % k;
        if (result < shift) {
            result = result + level - shift;
        } else {
            result -= shift;
            result += result / (k - 1);
        }
    }
    return {SurvivorReport::from_zero_indexed(result, Algorithm::block), steps};
}

[[nodiscard]] inline SurvivorReport survivor_block(const JosephusInstance& instance) {
    return survivor_block_counted(instance).survivor;
}

/// Full removal sequence plus survivor, all 1-indexed labels.
struct EliminationOrder {
    std::vector<Label> removed;
    Label survivor = 0;
};

/// Largest n the simulation accepts; it stores one link per label.
inline constexpr Label kOracleMaxN = Label{1} << 24;

/// Direct circle simulation on a circular singly linked list of labels.
[[nodiscard]] inline EliminationOrder oracle_simulate(const JosephusInstance& instance) {
    const Label n = instance.n();
    const Label k = instance.k();
    if (n > kOracleMaxN)
        throw InvalidInstance("oracle simulation is limited to n <= " + std::to_string(kOracleMaxN));

    // next[i] is the successor of label i+1; labels are stored 0-based.
    std::vector<std::uint32_t> next(n);
    for (Label i = 0; i < n; ++i) next[i] = static_cast<std::uint32_t>((i + 1) % n);

    EliminationOrder order;
    order.removed.reserve(n - 1);
    std::uint32_t before = static_cast<std::uint32_t>(n - 1);
    for (Label live = n; live > 1; --live) {
        for (Label hops = (k - 1) % live; hops > 0; --hops) before = next[before];
        const std::uint32_t victim = next[before];
        order.removed.push_back(Label{victim} + 1);
        next[before] = next[victim];
    }
    order.survivor = Label{before} + 1;
    return order;
}

[[nodiscard]] inline SurvivorReport survivor_oracle(const JosephusInstance& instance) {
    return SurvivorReport::from_one_indexed(oracle_simulate(instance).survivor, Algorithm::oracle);
}

} // namespace josephus
