#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <random>
#include <string>

namespace sic::testing {

inline std::u32string random_string(std::mt19937_64& rng, std::size_t length, std::size_t alphabet) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet - 1);
    std::u32string s;
    for (std::size_t k = 0; k < length; ++k) s.push_back(static_cast<char32_t>(U'a' + pick(rng)));
    return s;
}

// A target over `alphabet` symbols and a source drawn as a shuffled random
// sub-multiset of it, so the pair is always feasible.
struct feasible_pair {
    std::u32string source;
    std::u32string target;
};

inline feasible_pair random_feasible_pair(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m,
                                          std::size_t alphabet) {
    std::uniform_int_distribution<std::size_t> m_dist(0, max_m);
    feasible_pair p;
    p.target = random_string(rng, m_dist(rng), alphabet);
    std::u32string pool = p.target;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<std::size_t> n_dist(0, std::min(max_n, pool.size()));
    p.source = pool.substr(0, n_dist(rng));
    return p;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace sic::testing
