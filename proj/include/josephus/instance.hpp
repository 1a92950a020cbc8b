#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace josephus {

using Label = std::uint64_t;

/// Raised when an instance or intermediate value does not fit in 64 bits.
class CapacityError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Josephus problem: labels 1..n in a circle, every k-th live label removed.
///
/// Construction enforces n >= 1, k >= 1 and that n*k fits in 64 bits. Every
/// algorithm in this library keeps its intermediates at or below n*k, so a
/// constructed instance is safe to hand to any of them.
class JosephusInstance {
public:
    JosephusInstance(Label n, Label k) : n_(n), k_(k) {
        if (n == 0) throw InvalidInstance("n must be at least 1");
        if (k == 0) throw InvalidInstance("k must be at least 1");
        Label product = 0;
        if (__builtin_mul_overflow(n, k, &product))
            throw CapacityError("n*k = " + std::to_string(n) + "*" + std::to_string(k) +
                                " exceeds the 64-bit range");
    }

    [[nodiscard]] constexpr Label n() const noexcept { return n_; }
    [[nodiscard]] constexpr Label k() const noexcept { return k_; }

    friend constexpr bool operator==(const JosephusInstance&, const JosephusInstance&) = default;

private:
    Label n_;
    Label k_;
};

enum class Algorithm { maxnim, linear, block, oracle };

inline constexpr std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::maxnim: return "maxnim";
    case Algorithm::linear: return "linear";
    case Algorithm::block: return "block";
    case Algorithm::oracle: return "oracle";
    }
    return "unknown";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (auto a : {Algorithm::maxnim, Algorithm::linear, Algorithm::block, Algorithm::oracle})
        if (to_string(a) == name) return a;
    return std::nullopt;
}

/// The survivor in both indexing conventions. 1-indexed is canonical.
class SurvivorReport {
public:
    static constexpr SurvivorReport from_one_indexed(Label one_indexed, Algorithm algorithm) noexcept {
        return SurvivorReport(one_indexed, algorithm);
    }
    static constexpr SurvivorReport from_zero_indexed(Label zero_indexed, Algorithm algorithm) noexcept {
        return SurvivorReport(zero_indexed + 1, algorithm);
    }

    [[nodiscard]] constexpr Label one_indexed() const noexcept { return one_indexed_; }
    [[nodiscard]] constexpr Label zero_indexed() const noexcept { return one_indexed_ - 1; }
    [[nodiscard]] constexpr Algorithm algorithm() const noexcept { return algorithm_; }

private:
    constexpr SurvivorReport(Label one_indexed, Algorithm algorithm) noexcept
        : one_indexed_(one_indexed), algorithm_(algorithm) {}

    Label one_indexed_;
    Algorithm algorithm_;
};

} // namespace josephus
