#pragma once

// Difficulty measures of an instance and a seeded generator of instances
// with a controlled imbalance profile.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sic/alphabet.hpp"
#include "sic/errors.hpp"

namespace sic {

struct instance_stats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t d = 0;
    std::vector<std::size_t> n_counts;  // indexed by code - 1
    std::vector<std::size_t> m_counts;
    std::vector<std::int64_t> g_counts;  // min(n_a, m_a - n_a); negative when infeasible
    std::int64_t g = 0;
    std::vector<symbol_code> sigma_plus;
    std::size_t s = 0;
    // Cells of the memo table; 0 when no table is needed. Saturates at 2^64-1.
    std::uint64_t predicted_state_bound = 0;
    bool feasible = true;

    // d * (n+1) * (1 + sum(m_a - g_a)) * prod_{a in sigma_plus}(g_a + 1),
    // the s = d form applied to every instance.
    std::uint64_t uniform_state_bound() const {
        if (!feasible) return 0;
        return saturating_product(d, n + 1, 1 + k_range(), plus_product());
    }

    std::uint64_t k_range() const {
        std::uint64_t k = 0;
        for (std::size_t a = 0; a < d; ++a) k += m_counts[a] - static_cast<std::uint64_t>(g_counts[a]);
        return k;
    }

    std::uint64_t plus_product() const {
        std::uint64_t p = 1;
        for (symbol_code a : sigma_plus) p = saturating_product(p, static_cast<std::uint64_t>(g_counts[a - 1]) + 1);
        return p;
    }

    template <class... T>
    static std::uint64_t saturating_product(T... factors) {
        unsigned __int128 acc = 1;
        constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
        for (unsigned __int128 f : {static_cast<unsigned __int128>(factors)...}) {
            acc *= f;
            if (acc > cap) return cap;
        }
        return static_cast<std::uint64_t>(acc);
    }
};

inline instance_stats compute_stats(const indexed_string& source, const indexed_string& target) {
    instance_stats st;
    st.n = source.size();
    st.m = target.size();
    st.d = source.alphabet_size();
    st.n_counts = source.symbol_counts();
    st.m_counts = target.symbol_counts();
    st.g_counts.resize(st.d);
    for (std::size_t a = 0; a < st.d; ++a) {
        const auto n_a = static_cast<std::int64_t>(st.n_counts[a]);
        const auto m_a = static_cast<std::int64_t>(st.m_counts[a]);
        st.g_counts[a] = std::min(n_a, m_a - n_a);
        if (n_a > m_a) st.feasible = false;
        if (st.g_counts[a] > 0) ++st.s;
        st.g = a == 0 ? st.g_counts[a] : std::max(st.g, st.g_counts[a]);
    }
    if (st.s < st.d) {
        for (std::size_t a = 0; a < st.d; ++a) {
            if (st.g_counts[a] > 0) st.sigma_plus.push_back(static_cast<symbol_code>(a + 1));
        }
    } else if (st.d > 0) {
        const auto argmin = static_cast<std::size_t>(
            std::min_element(st.g_counts.begin(), st.g_counts.end()) - st.g_counts.begin());
        for (std::size_t a = 0; a < st.d; ++a) {
            if (a != argmin) st.sigma_plus.push_back(static_cast<symbol_code>(a + 1));
        }
    }
    if (st.feasible && st.s > 0) {
        const std::uint64_t base = instance_stats::saturating_product(st.n + 1, 1 + st.k_range(), st.plus_product());
        st.predicted_state_bound = st.s == st.d ? instance_stats::saturating_product(st.d, base) : base;
    }
    return st;
}

inline instance_stats compute_stats(std::u32string_view source, std::u32string_view target) {
    const auto map = build_alphabet(source, target);
    return compute_stats(index_string(source, map), index_string(target, map));
}

enum class imbalance_profile { zero_g, balanced_g, max_g, custom };

inline const char* to_string(imbalance_profile p) {
    switch (p) {
    case imbalance_profile::zero_g: return "zero-g";
    case imbalance_profile::balanced_g: return "balanced-g";
    case imbalance_profile::max_g: return "max-g";
    case imbalance_profile::custom: return "custom";
    }
    return "?";
}

inline std::optional<imbalance_profile> parse_profile(std::string_view name) {
    if (name == "zero-g") return imbalance_profile::zero_g;
    if (name == "balanced-g") return imbalance_profile::balanced_g;
    if (name == "max-g") return imbalance_profile::max_g;
    if (name == "custom") return imbalance_profile::custom;
    return std::nullopt;
}

struct generator_spec {
    std::size_t d = 2;
    std::size_t n = 0;
    std::size_t m = 0;
    imbalance_profile profile = imbalance_profile::zero_g;
    std::uint64_t seed = 0;
    std::vector<std::size_t> custom_g;           // custom profile only; one entry per symbol
    std::optional<std::size_t> local_shuffles;   // default n / 4
};

struct generated_instance {
    std::u32string source;
    std::u32string target;
};

// The a-th generated symbol (0-based).
inline char32_t generated_symbol(std::size_t a) {
    return a < 26 ? static_cast<char32_t>(U'a' + a) : static_cast<char32_t>(0x4E00 + a);
}

namespace detail {

// total items spread uniformly over `bins` bins, each bin receiving at least `floor`.
inline std::vector<std::size_t> multinomial(std::mt19937_64& rng, std::size_t total, std::size_t bins,
                                            std::size_t floor) {
    std::vector<std::size_t> out(bins, floor);
    if (bins == 0) return out;
    std::uniform_int_distribution<std::size_t> pick(0, bins - 1);
    for (std::size_t k = floor * bins; k < total; ++k) ++out[pick(rng)];
    return out;
}

// n split over symbols in proportion to m_counts (largest remainder).
inline std::vector<std::size_t> proportional_split(const std::vector<std::size_t>& m_counts, std::size_t n,
                                                   std::size_t m) {
    std::vector<std::size_t> out(m_counts.size());
    std::vector<std::pair<std::size_t, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t a = 0; a < m_counts.size(); ++a) {
        out[a] = n * m_counts[a] / m;
        assigned += out[a];
        remainders.emplace_back(n * m_counts[a] % m, a);
    }
    std::sort(remainders.begin(), remainders.end(), std::greater<>());
    for (std::size_t k = 0; assigned < n; ++k, ++assigned) ++out[remainders[k].second];
    return out;
}

inline std::int64_t imbalance_of(std::size_t n_a, std::size_t m_a) {
    return std::min<std::int64_t>(static_cast<std::int64_t>(n_a), static_cast<std::int64_t>(m_a - n_a));
}

// Starts every symbol at half its target count, then moves the surplus or
// deficit onto the symbols whose imbalance is currently smallest, so the
// largest imbalances survive.
inline std::vector<std::size_t> max_imbalance_split(const std::vector<std::size_t>& m_counts, std::size_t n) {
    std::vector<std::size_t> out(m_counts.size());
    std::size_t total = 0;
    for (std::size_t a = 0; a < m_counts.size(); ++a) total += out[a] = m_counts[a] / 2;
    while (total != n) {
        const bool grow = total < n;
        std::optional<std::size_t> pick;
        for (std::size_t a = 0; a < out.size(); ++a) {
            if (grow ? out[a] == m_counts[a] : out[a] == 0) continue;
            if (!pick || imbalance_of(out[a], m_counts[a]) < imbalance_of(out[*pick], m_counts[*pick])) pick = a;
        }
        if (grow) {
            ++out[*pick];
            ++total;
        } else {
            --out[*pick];
            --total;
        }
    }
    return out;
}

}  // namespace detail

// Per-symbol (n_a, m_a) targets for a spec. Throws infeasible_profile.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> profile_counts(const generator_spec& spec,
                                                                                  std::mt19937_64& rng) {
    const std::size_t d = spec.d, n = spec.n, m = spec.m;
    if (d == 0) throw infeasible_profile("alphabet size must be at least 1");
    if (n > m) throw infeasible_profile("source cannot be longer than target");
    if (m < d) throw infeasible_profile("target too short for every symbol to occur");

    std::vector<std::size_t> m_counts, n_counts;
    switch (spec.profile) {
    case imbalance_profile::zero_g: {
        std::size_t full = 0;
        if (n == m) {
            full = d;
        } else if (n > 0) {
            const std::size_t lo = std::max<std::size_t>(1, d > m - n ? d - (m - n) : 0);
            const std::size_t hi = std::min(d - 1, n);
            if (d < 2 || lo > hi) throw infeasible_profile("zero-g needs a split of symbols into present and absent");
            full = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
        }
        std::vector<std::size_t> symbols(d);
        std::iota(symbols.begin(), symbols.end(), std::size_t{0});
        std::shuffle(symbols.begin(), symbols.end(), rng);
        const auto present = detail::multinomial(rng, n, full, 1);
        const auto absent = detail::multinomial(rng, m - n, d - full, 1);
        m_counts.assign(d, 0);
        n_counts.assign(d, 0);
        for (std::size_t k = 0; k < d; ++k) {
            const std::size_t a = symbols[k];
            if (k < full) {
                m_counts[a] = n_counts[a] = present[k];
            } else {
                m_counts[a] = absent[k - full];
            }
        }
        break;
    }
    case imbalance_profile::balanced_g:
        m_counts = detail::multinomial(rng, m, d, 1);
        n_counts = detail::proportional_split(m_counts, n, m);
        break;
    case imbalance_profile::max_g:
        m_counts = detail::multinomial(rng, m, d, 1);
        n_counts = detail::max_imbalance_split(m_counts, n);
        break;
    case imbalance_profile::custom: {
        if (spec.custom_g.size() != d) throw infeasible_profile("custom profile needs one target per symbol");
        std::size_t g_sum = 0, floor_sum = 0;
        std::vector<std::size_t> floors(d);
        for (std::size_t a = 0; a < d; ++a) {
            g_sum += spec.custom_g[a];
            floor_sum += floors[a] = std::max<std::size_t>(1, 2 * spec.custom_g[a]);
        }
        if (g_sum != n) throw infeasible_profile("custom targets must sum to n");
        if (floor_sum > m) throw infeasible_profile("custom targets need m >= sum(max(1, 2 g_a))");
        const auto extra = detail::multinomial(rng, m - floor_sum, d, 0);
        m_counts.resize(d);
        for (std::size_t a = 0; a < d; ++a) m_counts[a] = floors[a] + extra[a];
        n_counts = spec.custom_g;
        break;
    }
    }
    return {std::move(n_counts), std::move(m_counts)};
}

// L is a uniform shuffle of the chosen multiset; S keeps a random subset of
// each symbol's occurrences in L order, then receives a bounded number of
// random adjacent swaps.
inline generated_instance generate_instance(const generator_spec& spec) {
    std::mt19937_64 rng(spec.seed);
    const auto [n_counts, m_counts] = profile_counts(spec, rng);

    std::vector<std::size_t> target;
    target.reserve(spec.m);
    for (std::size_t a = 0; a < spec.d; ++a) target.insert(target.end(), m_counts[a], a);
    std::shuffle(target.begin(), target.end(), rng);

    std::vector<std::vector<std::size_t>> occurrences(spec.d);
    for (std::size_t p = 0; p < target.size(); ++p) occurrences[target[p]].push_back(p);
    std::vector<bool> keep(target.size(), false);
    for (std::size_t a = 0; a < spec.d; ++a) {
        std::shuffle(occurrences[a].begin(), occurrences[a].end(), rng);
        for (std::size_t k = 0; k < n_counts[a]; ++k) keep[occurrences[a][k]] = true;
    }
    std::vector<std::size_t> source;
    source.reserve(spec.n);
    for (std::size_t p = 0; p < target.size(); ++p) {
        if (keep[p]) source.push_back(target[p]);
    }
    if (source.size() >= 2) {
        const std::size_t shuffles = spec.local_shuffles.value_or(source.size() / 4);
        std::uniform_int_distribution<std::size_t> pos(0, source.size() - 2);
        for (std::size_t k = 0; k < shuffles; ++k) {
            const std::size_t p = pos(rng);
            std::swap(source[p], source[p + 1]);
        }
    }

    generated_instance out;
    for (std::size_t a : source) out.source.push_back(generated_symbol(a));
    for (std::size_t a : target) out.target.push_back(generated_symbol(a));
    return out;
}

}  // namespace sic
