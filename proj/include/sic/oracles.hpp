#pragma once

// Brute-force reference distances for small instances. Neither shares code
// with the engine.
//
//   ucs_distance       uniform-cost search over working strings
//   matching_distance  (m - n) + minimum crossings over injective,
//                      symbol-preserving matchings of S into L

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sic/cost.hpp"
#include "sic/errors.hpp"

namespace sic {

inline constexpr std::size_t default_state_budget = 10'000'000;
inline constexpr std::size_t default_combination_budget = 1'000'000;

namespace detail {

template <class Symbol>
std::map<Symbol, std::size_t> histogram(std::basic_string_view<Symbol> s) {
    std::map<Symbol, std::size_t> h;
    for (Symbol c : s) ++h[c];
    return h;
}

template <class Symbol>
bool dominated(std::basic_string_view<Symbol> source, std::basic_string_view<Symbol> target) {
    const auto hs = histogram(source);
    const auto ht = histogram(target);
    for (const auto& [sym, n] : hs) {
        auto it = ht.find(sym);
        if (it == ht.end() || it->second < n) return false;
    }
    return true;
}

}  // namespace detail

// Dijkstra over working strings. Edges: insert any symbol still missing
// with respect to the target's counts, or swap an adjacent unequal pair.
template <class Weight, class Symbol>
basic_cost<Weight> ucs_distance(std::basic_string_view<Symbol> source, std::basic_string_view<Symbol> target,
                                Weight c_ins, Weight c_swap, std::size_t state_budget = default_state_budget) {
    using string = std::basic_string<Symbol>;
    if (source.size() > target.size() || !detail::dominated(source, target)) return basic_cost<Weight>::unreachable();

    const auto goal_counts = detail::histogram(target);
    std::unordered_map<string, Weight> best;
    using entry = std::pair<Weight, string>;
    std::priority_queue<entry, std::vector<entry>, std::greater<>> open;

    best.emplace(string(source), Weight{0});
    open.emplace(Weight{0}, string(source));
    const string goal(target);

    auto relax = [&](string&& next, Weight d) {
        auto [it, inserted] = best.try_emplace(next, d);
        if (!inserted) {
            if (!(d < it->second)) return;
            it->second = d;
        } else if (best.size() > state_budget) {
            throw instance_too_large("uniform-cost search exceeded its state budget");
        }
        open.emplace(d, std::move(next));
    };

    while (!open.empty()) {
        auto [d, w] = open.top();
        open.pop();
        if (best.at(w) < d) continue;
        if (w == goal) return basic_cost<Weight>(d);

        if (w.size() < goal.size()) {
            const auto counts = detail::histogram(std::basic_string_view<Symbol>(w));
            for (const auto& [sym, want] : goal_counts) {
                auto it = counts.find(sym);
                if (it != counts.end() && it->second >= want) continue;
                for (std::size_t p = 0; p <= w.size(); ++p) {
                    string next = w;
                    next.insert(next.begin() + static_cast<std::ptrdiff_t>(p), sym);
                    relax(std::move(next), d + c_ins);
                }
            }
        }
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] == w[p + 1]) continue;
            string next = w;
            std::swap(next[p], next[p + 1]);
            relax(std::move(next), d + c_swap);
        }
    }
    return basic_cost<Weight>::unreachable();
}

template <class Symbol>
cost ucs_distance(std::basic_string_view<Symbol> source, std::basic_string_view<Symbol> target,
                  std::size_t state_budget = default_state_budget) {
    return ucs_distance<std::int64_t, Symbol>(source, target, 1, 1, state_budget);
}

inline cost ucs_distance(std::u32string_view source, std::u32string_view target,
                         std::size_t state_budget = default_state_budget) {
    return ucs_distance<char32_t>(source, target, state_budget);
}

inline weighted_cost ucs_distance(std::u32string_view source, std::u32string_view target, rational c_ins,
                                  rational c_swap, std::size_t state_budget = default_state_budget) {
    return ucs_distance<rational, char32_t>(source, target, c_ins, c_swap, state_budget);
}

// Enumerates, per symbol, which n_a of the m_a target occurrences receive
// the source occurrences (in order), and minimises the crossing count.
template <class Symbol>
cost matching_distance(std::basic_string_view<Symbol> source, std::basic_string_view<Symbol> target,
                       std::size_t combination_budget = default_combination_budget) {
    if (source.size() > target.size() || !detail::dominated(source, target)) return cost::unreachable();

    std::map<Symbol, std::vector<std::size_t>> source_pos, target_pos;
    for (std::size_t i = 0; i < source.size(); ++i) source_pos[source[i]].push_back(i);
    for (std::size_t j = 0; j < target.size(); ++j) target_pos[target[j]].push_back(j);

    struct symbol_class {
        const std::vector<std::size_t>* from;
        const std::vector<std::size_t>* to;
    };
    std::vector<symbol_class> classes;
    double combinations = 1;
    for (const auto& [sym, from] : source_pos) {
        const auto& to = target_pos.at(sym);
        classes.push_back({&from, &to});
        double binom = 1;
        for (std::size_t k = 0; k < from.size(); ++k) {
            binom = binom * static_cast<double>(to.size() - k) / static_cast<double>(k + 1);
        }
        combinations *= binom;
    }
    if (combinations > static_cast<double>(combination_budget)) {
        throw instance_too_large("matching enumeration exceeded its combination budget");
    }

    std::vector<std::size_t> phi(source.size(), 0);
    std::int64_t best = -1;

    auto crossings = [&] {
        std::int64_t total = 0;
        for (std::size_t a = 0; a < phi.size(); ++a) {
            for (std::size_t b = a + 1; b < phi.size(); ++b) total += phi[a] > phi[b];
        }
        return total;
    };

    // Choose a strictly increasing subsequence of target positions for each
    // class in turn.
    std::function<void(std::size_t, std::size_t, std::size_t)> choose = [&](std::size_t cls, std::size_t taken,
                                                                            std::size_t start) {
        if (cls == classes.size()) {
            const auto x = crossings();
            if (best < 0 || x < best) best = x;
            return;
        }
        const auto& from = *classes[cls].from;
        const auto& to = *classes[cls].to;
        if (taken == from.size()) {
            choose(cls + 1, 0, 0);
            return;
        }
        const std::size_t still_needed = from.size() - taken;
        for (std::size_t t = start; t + still_needed <= to.size(); ++t) {
            phi[from[taken]] = to[t];
            choose(cls, taken + 1, t + 1);
        }
    };
    choose(0, 0, 0);

    return cost(static_cast<std::int64_t>(target.size() - source.size()) + (best < 0 ? 0 : best));
}

inline cost matching_distance(std::u32string_view source, std::u32string_view target,
                              std::size_t combination_budget = default_combination_budget) {
    return matching_distance<char32_t>(source, target, combination_budget);
}

}  // namespace sic
