#include <atomic>
#include <cmath>
#include <cstdlib>
#include <new>
#include <random>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "josephus/maxnim.hpp"

namespace {
std::atomic<std::size_t> g_allocations{0};
}

void* operator new(std::size_t size) {
    ++g_allocations;
    if (void* p = std::malloc(size == 0 ? 1 : size)) return p;
    throw std::bad_alloc();
}
void operator delete(void* p) noexcept { std::free(p); }
void operator delete(void* p, std::size_t) noexcept { std::free(p); }

namespace josephus {
namespace {

using testing::closed_form_k2;
using testing::simulate_by_erase;

TEST(HStep, Examples) {
    EXPECT_EQ(h_step(2, 3), 4u);
    EXPECT_EQ(h_step(0, 5), 1u);
    EXPECT_EQ(h_step(11, 3), 17u);
}

TEST(HStep, RejectsSmallK) {
    EXPECT_THROW((void)h_step(3, 1), InvalidInstance);
    EXPECT_THROW((void)h_step(3, 0), InvalidInstance);
}

TEST(HStep, OverflowIsCapacityError) {
    EXPECT_THROW((void)h_step(~Label{0} - 1, 3), CapacityError);
    EXPECT_THROW((void)h_step(~Label{0}, 1u << 30), CapacityError);
}

TEST(HStep, StrictGrowthAndMonotonicity) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20000; ++i) {
        const Label k = 2 + rng() % 5000;
        const Label x = rng() % (Label{1} << 40);
        const Label y = x + 1 + rng() % 1000;
        EXPECT_GE(h_step(x, k), x + 1);
        EXPECT_LT(h_step(x, k), h_step(y, k)) << "x=" << x << " y=" << y << " k=" << k;
    }
}

TEST(Instance, Validation) {
    EXPECT_THROW(JosephusInstance(0, 3), InvalidInstance);
    EXPECT_THROW(JosephusInstance(3, 0), InvalidInstance);
    EXPECT_THROW(JosephusInstance(Label{1} << 32, Label{1} << 32), CapacityError);
    EXPECT_NO_THROW(JosephusInstance(Label{1} << 32, (Label{1} << 32) - 1));
    EXPECT_NO_THROW(JosephusInstance(~Label{0}, 1));
}

TEST(SurvivorMaxnim, Examples) {
    EXPECT_EQ(survivor_maxnim({7, 3}).one_indexed(), 4u);
    EXPECT_EQ(survivor_maxnim({1, 5}).one_indexed(), 1u);
    EXPECT_EQ(survivor_maxnim({41, 3}).one_indexed(), 31u);
    EXPECT_EQ(survivor_maxnim({2, 2}).one_indexed(), 1u);
    EXPECT_EQ(survivor_maxnim({7, 3}).zero_indexed(), 3u);
    EXPECT_EQ(survivor_maxnim({7, 3}).algorithm(), Algorithm::maxnim);
}

TEST(SurvivorMaxnim, KEqualsOneLeavesLastLabel) {
    for (Label n = 1; n < 50; ++n) EXPECT_EQ(survivor_maxnim({n, 1}).one_indexed(), n);
    EXPECT_EQ(survivor_maxnim({~Label{0}, 1}).one_indexed(), ~Label{0});
}

TEST(SurvivorMaxnim, MatchesBruteForce) {
    for (Label n = 1; n <= 120; ++n)
        for (Label k = 1; k <= 40; ++k)
            ASSERT_EQ(survivor_maxnim({n, k}).one_indexed(), simulate_by_erase(n, k).survivor)
                << "n=" << n << " k=" << k;
}

TEST(SurvivorMaxnim, WorksAtCapacityEdge) {
    // n*k exactly at 2^64 - 1 would need k | 2^64-1; use the largest n for k = 2.
    const Label n = (~Label{0}) / 2;
    EXPECT_EQ(survivor_maxnim({n, 2}).one_indexed(), closed_form_k2(n));
}

TEST(ClosedFormK2, ValidatedByBruteForceThenUsedAtScale) {
    for (Label n = 1; n <= 2048; ++n) ASSERT_EQ(closed_form_k2(n), simulate_by_erase(n, 2).survivor) << n;

    std::mt19937_64 rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const Label n = 1 + rng() % 1'000'000'000'000'000ULL;
        ASSERT_EQ(survivor_maxnim({n, 2}).one_indexed(), closed_form_k2(n)) << n;
    }
}

TEST(SurvivorMaxnimTraced, Examples) {
    {
        const auto [report, trace] = survivor_maxnim_traced({7, 3});
        EXPECT_EQ(trace.xs, (std::vector<Label>{2, 4, 7, 11, 17}));
        EXPECT_EQ(trace.p(), 4u);
        EXPECT_EQ(report.one_indexed(), 4u);
    }
    {
        const auto [report, trace] = survivor_maxnim_traced({1, 3});
        EXPECT_EQ(trace.xs, (std::vector<Label>{2}));
        EXPECT_EQ(trace.p(), 0u);
        EXPECT_EQ(report.one_indexed(), 1u);
    }
    {
        const auto [report, trace] = survivor_maxnim_traced({5, 2});
        EXPECT_EQ(trace.xs, (std::vector<Label>{1, 3, 7}));
        EXPECT_EQ(trace.p(), 2u);
        EXPECT_EQ(report.one_indexed(), 3u);
    }
}

TEST(SurvivorMaxnimTraced, RejectsKOne) { EXPECT_THROW((void)survivor_maxnim_traced({5, 1}), InvalidInstance); }

TEST(SurvivorMaxnimTraced, TraceInvariants) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 3000; ++i) {
        const Label k = 2 + rng() % 300;
        const Label n = 1 + rng() % 100000;
        const JosephusInstance instance(n, k);
        const auto [report, trace] = survivor_maxnim_traced(instance);
        ASSERT_EQ(report.one_indexed(), survivor_maxnim(instance).one_indexed());
        ASSERT_EQ(trace.xs.front(), k - 1);
        for (std::size_t j = 0; j + 1 < trace.xs.size(); ++j) {
            ASSERT_LT(trace.xs[j], trace.xs[j + 1]);
            ASSERT_EQ(trace.xs[j + 1], h_step(trace.xs[j], k));
        }
        const Label target = n * (k - 1);
        ASSERT_GE(trace.final_iterate(), target);
        ASSERT_LE(trace.final_iterate(), n * k - 1);
        if (trace.p() > 0) {
            ASSERT_LT(trace.xs[trace.p() - 1], target);
        }
        ASSERT_GE(report.one_indexed(), 1u);
        ASSERT_LE(report.one_indexed(), n);
    }
}

TEST(IterationBounds, Examples) {
    const auto b = iteration_bounds({7, 3});
    EXPECT_NEAR(b.v, std::log(7.0) / std::log(1.5), 1e-12);
    EXPECT_NEAR(b.v, 4.80, 0.01);
    EXPECT_NEAR(b.w, 3.42, 0.01);
    EXPECT_EQ(b.ceil_v, 5u);
    EXPECT_EQ(b.floor_w, 3u);
    EXPECT_TRUE(b.brackets(4));

    const auto one = iteration_bounds({1, 2});
    EXPECT_EQ(one.v, 0.0);
    EXPECT_EQ(one.ceil_v, 0u);
    EXPECT_EQ(one.floor_w, 0u);

    const JosephusInstance million(1'000'000, 2);
    const auto big = iteration_bounds(million);
    const auto p = survivor_maxnim_traced(million).second.p();
    EXPECT_TRUE(big.brackets(p)) << "p=" << p << " [" << big.floor_w << ", " << big.ceil_v << "]";
}

TEST(IterationBounds, RejectsKOne) { EXPECT_THROW((void)iteration_bounds({5, 1}), InvalidInstance); }

TEST(IterationBounds, StableForLargeK) {
    // Direct ln k - ln(k-1) would lose most digits here.
    const Label k = Label{1} << 40;
    const auto b = iteration_bounds({4, k});
    EXPECT_NEAR(b.v / (static_cast<double>(k) * std::log(4.0)), 1.0, 1e-9);
    EXPECT_LE(b.floor_w, b.ceil_v);
}

TEST(IterationBounds, BracketAndComplexityProperty) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 3000; ++i) {
        const Label k = 2 + rng() % 2000;
        const Label n = 1 + rng() % 5'000'000;
        const JosephusInstance instance(n, k);
        const auto b = iteration_bounds(instance);
        const auto p = survivor_maxnim_traced(instance).second.p();
        ASSERT_LE(b.floor_w, b.ceil_v);
        ASSERT_TRUE(std::isfinite(b.v) && std::isfinite(b.w) && b.v >= 0 && b.w >= 0);
        ASSERT_TRUE(b.brackets(p)) << "n=" << n << " k=" << k << " p=" << p;
        if (n >= 2) {
            ASSERT_LE(static_cast<double>(p), complexity_bound(instance));
        }
    }
}

TEST(SurvivorMaxnim, DoesNotAllocate) {
    const JosephusInstance instance(1'000'000'000'000ULL, 10'000);
    const auto before = g_allocations.load();
    const auto report = survivor_maxnim(instance);
    EXPECT_EQ(g_allocations.load(), before);
    EXPECT_GE(report.one_indexed(), 1u);
    EXPECT_LE(report.one_indexed(), instance.n());
}

} // namespace
} // namespace josephus
