#include "sic/instance.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "sic/engine.hpp"
#include "sic/problem.hpp"
#include "support.hpp"

namespace {

using sic::compute_stats;
using sic::generator_spec;
using sic::imbalance_profile;

TEST(InstanceStats, Examples) {
    const auto same = compute_stats(U"ab", U"ab");
    EXPECT_EQ(same.g, 0);
    EXPECT_EQ(same.s, 0u);
    EXPECT_TRUE(same.feasible);
    EXPECT_EQ(same.predicted_state_bound, 0u);

    const auto empty = compute_stats(U"", U"abc");
    for (auto g : empty.g_counts) EXPECT_EQ(g, 0);
    EXPECT_TRUE(empty.feasible);

    const auto mixed = compute_stats(U"aab", U"aaabab");
    const auto map = sic::build_alphabet(U"aab", U"aaabab");
    EXPECT_EQ(mixed.n_counts[map.code_of(U'a') - 1], 2u);
    EXPECT_EQ(mixed.m_counts[map.code_of(U'a') - 1], 4u);
    EXPECT_EQ(mixed.g_counts[map.code_of(U'a') - 1], 2);
    EXPECT_EQ(mixed.g_counts[map.code_of(U'b') - 1], 1);
    EXPECT_EQ(mixed.g, 2);
    EXPECT_EQ(mixed.s, 2u);
    // s = d: sigma_plus drops the smaller imbalance; bound 2*4*(1+3)*3.
    EXPECT_EQ(mixed.sigma_plus.size(), 1u);
    EXPECT_EQ(mixed.predicted_state_bound, 2u * 4u * 4u * 3u);
    EXPECT_EQ(mixed.uniform_state_bound(), mixed.predicted_state_bound);

    const auto bad = compute_stats(U"aa", U"a");
    EXPECT_FALSE(bad.feasible);
    EXPECT_EQ(bad.predicted_state_bound, 0u);
}

TEST(InstanceStats, RecomputedFromRawStrings) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pr = sic::testing::random_feasible_pair(rng, 10, 14, 4);
        const auto st = compute_stats(pr.source, pr.target);
        const auto map = sic::build_alphabet(pr.source, pr.target);
        std::int64_t g = 0;
        std::size_t s = 0;
        for (char32_t c : map.symbols()) {
            const auto n_a = static_cast<std::int64_t>(std::count(pr.source.begin(), pr.source.end(), c));
            const auto m_a = static_cast<std::int64_t>(std::count(pr.target.begin(), pr.target.end(), c));
            const auto g_a = std::min(n_a, m_a - n_a);
            EXPECT_EQ(st.g_counts[map.code_of(c) - 1], g_a);
            g = std::max(g, g_a);
            s += g_a > 0;
        }
        EXPECT_EQ(st.g, g);
        EXPECT_EQ(st.s, s);
    }
}

TEST(InstanceStats, InvariantUnderRelabeling) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pr = sic::testing::random_feasible_pair(rng, 10, 14, 4);
        std::u32string perm = U"abcd";
        std::shuffle(perm.begin(), perm.end(), rng);
        auto relabel = [&](std::u32string x) {
            for (auto& c : x) c = perm[c - U'a'];
            return x;
        };
        const auto a = compute_stats(pr.source, pr.target);
        const auto b = compute_stats(relabel(pr.source), relabel(pr.target));
        auto sorted = [](std::vector<std::int64_t> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        EXPECT_EQ(sorted(a.g_counts), sorted(b.g_counts));
        EXPECT_EQ(a.g, b.g);
        EXPECT_EQ(a.s, b.s);
        EXPECT_EQ(a.sigma_plus.size(), b.sigma_plus.size());
        EXPECT_EQ(a.predicted_state_bound, b.predicted_state_bound);
        EXPECT_EQ(a.uniform_state_bound(), b.uniform_state_bound());
    }
}

TEST(InstanceStats, EqualLengthsNeedNoTable) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto l = sic::testing::random_string(rng, sic::testing::uniform(rng, 0, 30), 4);
        auto s = l;
        std::shuffle(s.begin(), s.end(), rng);
        const auto st = compute_stats(s, l);
        EXPECT_EQ(st.g, 0);
        EXPECT_EQ(st.predicted_state_bound, 0u);
    }
}

TEST(Profiles, NamesRoundTrip) {
    for (auto p : {imbalance_profile::zero_g, imbalance_profile::balanced_g, imbalance_profile::max_g,
                   imbalance_profile::custom}) {
        EXPECT_EQ(sic::parse_profile(sic::to_string(p)), p);
    }
    EXPECT_FALSE(sic::parse_profile("medium").has_value());
}

TEST(GenerateInstance, EmptySourceZeroG) {
    const auto inst = sic::generate_instance({2, 0, 5, imbalance_profile::zero_g, 1});
    EXPECT_TRUE(inst.source.empty());
    EXPECT_EQ(inst.target.size(), 5u);
}

TEST(GenerateInstance, Deterministic) {
    for (auto profile : {imbalance_profile::zero_g, imbalance_profile::balanced_g, imbalance_profile::max_g}) {
        const generator_spec spec{3, 20, 30, profile, 99};
        const auto a = sic::generate_instance(spec);
        const auto b = sic::generate_instance(spec);
        EXPECT_EQ(a.source, b.source);
        EXPECT_EQ(a.target, b.target);
    }
}

TEST(GenerateInstance, RejectsImpossibleSpecs) {
    EXPECT_THROW(sic::generate_instance({0, 0, 0, imbalance_profile::zero_g, 1}), sic::infeasible_profile);
    EXPECT_THROW(sic::generate_instance({2, 5, 3, imbalance_profile::max_g, 1}), sic::infeasible_profile);
    EXPECT_THROW(sic::generate_instance({4, 1, 3, imbalance_profile::max_g, 1}), sic::infeasible_profile);
    generator_spec custom{2, 3, 4, imbalance_profile::custom, 1};
    custom.custom_g = {2, 1};
    EXPECT_THROW(sic::generate_instance(custom), sic::infeasible_profile);
}

TEST(GenerateInstance, CustomProfileHitsTargets) {
    generator_spec spec{3, 5, 14, imbalance_profile::custom, 4};
    spec.custom_g = {3, 0, 2};
    const auto inst = sic::generate_instance(spec);
    const auto st = compute_stats(inst.source, inst.target);
    auto g = st.g_counts;
    std::sort(g.begin(), g.end());
    EXPECT_EQ(g, (std::vector<std::int64_t>{0, 2, 3}));
}

TEST(GenerateInstance, OutputIsAlwaysFeasibleWithRequestedShape) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        generator_spec spec;
        spec.d = sic::testing::uniform(rng, 1, 6);
        spec.m = sic::testing::uniform(rng, spec.d, 40);
        spec.n = sic::testing::uniform(rng, 0, spec.m);
        spec.profile = static_cast<imbalance_profile>(sic::testing::uniform(rng, 0, 2));
        spec.seed = rng();
        sic::generated_instance inst;
        try {
            inst = sic::generate_instance(spec);
        } catch (const sic::infeasible_profile&) {
            continue;
        }
        EXPECT_EQ(inst.source.size(), spec.n);
        EXPECT_EQ(inst.target.size(), spec.m);
        const auto st = compute_stats(inst.source, inst.target);
        EXPECT_TRUE(st.feasible);
        EXPECT_EQ(st.d, spec.d);
        if (spec.profile == imbalance_profile::zero_g) {
            EXPECT_EQ(st.g, 0);
        }
    }
}

// Largest g over all n-vectors with the drawn target counts.
std::int64_t best_attainable_g(const std::vector<std::size_t>& m_counts, std::size_t n) {
    std::int64_t best = -1;
    std::vector<std::size_t> pick(m_counts.size());
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t a, std::size_t left) {
        if (a == m_counts.size()) {
            if (left != 0) return;
            std::int64_t g = 0;
            for (std::size_t b = 0; b < m_counts.size(); ++b) g = std::max(g, sic::detail::imbalance_of(pick[b], m_counts[b]));
            best = std::max(best, g);
            return;
        }
        for (std::size_t v = 0; v <= std::min(left, m_counts[a]); ++v) {
            pick[a] = v;
            rec(a + 1, left - v);
        }
    };
    rec(0, n);
    return best;
}

TEST(GenerateInstance, MaxGReachesTheLargestAttainableImbalance) {
    {
        const auto inst = sic::generate_instance({3, 6, 8, imbalance_profile::max_g, 7});
        const auto st = compute_stats(inst.source, inst.target);
        EXPECT_EQ(st.g, best_attainable_g(st.m_counts, 6));
    }
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 300; ++trial) {
        generator_spec spec;
        spec.d = sic::testing::uniform(rng, 1, 4);
        spec.m = sic::testing::uniform(rng, spec.d, 14);
        spec.n = sic::testing::uniform(rng, 0, spec.m);
        spec.profile = imbalance_profile::max_g;
        spec.seed = rng();
        const auto inst = sic::generate_instance(spec);
        const auto st = compute_stats(inst.source, inst.target);
        ASSERT_EQ(st.g, best_attainable_g(st.m_counts, spec.n)) << "trial " << trial;
    }
}

TEST(GenerateInstance, ZeroGNeedsNoMemo) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = sic::generate_instance({3, 20, 30, imbalance_profile::zero_g, seed});
        const auto r = sic::swap_insert_correction(inst.source, inst.target);
        EXPECT_TRUE(r.distance().finite());
        EXPECT_EQ(r.detail.memo_entries, 0u);
    }
}

}  // namespace
