#pragma once

// Convenience layer over raw (unicode scalar) strings: builds the shared
// alphabet, indexes both strings and runs the engine.

#include <optional>
#include <string>
#include <string_view>

#include "sic/alphabet.hpp"
#include "sic/engine.hpp"
#include "sic/script.hpp"

namespace sic {

struct problem {
    alphabet_map map;
    indexed_string source;
    indexed_string target;

    static problem make(std::u32string_view source, std::u32string_view target) {
        problem p;
        p.map = build_alphabet(source, target);
        p.source = index_string(source, p.map);
        p.target = index_string(target, p.map);
        return p;
    }
};

struct correction {
    engine_result detail;
    std::optional<script> raw_script;

    const cost& distance() const noexcept { return detail.distance; }
};

inline correction swap_insert_correction(std::u32string_view source, std::u32string_view target,
                                         bool with_script = false) {
    const auto p = problem::make(source, target);
    correction out;
    out.detail = swap_insert_engine(p.source, p.target).compute(with_script);
    if (out.detail.script) out.raw_script = to_raw(*out.detail.script, p.map);
    return out;
}

// Deletions + swaps turning `longer` into `shorter`.
inline correction swap_delete_correction(std::u32string_view longer, std::u32string_view shorter,
                                         bool with_script = false) {
    const auto p = problem::make(shorter, longer);
    correction out;
    out.detail = swap_delete_distance(p.target, p.source, with_script);
    if (out.detail.script) out.raw_script = to_raw(*out.detail.script, p.map);
    return out;
}

inline weighted_cost weighted_swap_insert(std::u32string_view source, std::u32string_view target, rational c_ins,
                                          rational c_swap) {
    const auto p = problem::make(source, target);
    return weighted_distance(p.source, p.target, c_ins, c_swap);
}

}  // namespace sic
