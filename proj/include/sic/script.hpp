#pragma once

// Edit scripts and their replay. Positions are 1-based into the working
// string at the moment the operation is applied.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sic/alphabet.hpp"
#include "sic/errors.hpp"

namespace sic {

enum class op_kind : std::uint8_t { insert, swap, erase };

template <class Symbol>
struct basic_edit_op {
    op_kind kind = op_kind::swap;
    std::size_t position = 1;
    Symbol symbol{};  // meaningful for insert only

    static basic_edit_op insert(std::size_t position, Symbol symbol) { return {op_kind::insert, position, symbol}; }
    static basic_edit_op swap(std::size_t position) { return {op_kind::swap, position, Symbol{}}; }
    static basic_edit_op erase(std::size_t position) { return {op_kind::erase, position, Symbol{}}; }

    friend bool operator==(const basic_edit_op& a, const basic_edit_op& b) {
        if (a.kind != b.kind || a.position != b.position) return false;
        return a.kind != op_kind::insert || a.symbol == b.symbol;
    }
};

template <class Symbol>
struct basic_script {
    std::vector<basic_edit_op<Symbol>> ops;

    std::size_t total_cost() const noexcept { return ops.size(); }

    std::size_t count(op_kind kind) const noexcept {
        std::size_t n = 0;
        for (const auto& op : ops) n += op.kind == kind;
        return n;
    }

    bool empty() const noexcept { return ops.empty(); }
};

using code_script = basic_script<symbol_code>;
using script = basic_script<char32_t>;
using edit_op = basic_edit_op<char32_t>;

inline script to_raw(const code_script& s, const alphabet_map& map) {
    script out;
    out.ops.reserve(s.ops.size());
    for (const auto& op : s.ops) {
        out.ops.push_back({op.kind, op.position, op.kind == op_kind::insert ? map.raw_of(op.symbol) : char32_t{}});
    }
    return out;
}

template <class Symbol>
void apply_op(std::basic_string<Symbol>& w, const basic_edit_op<Symbol>& op, std::size_t op_index) {
    using reason = script_error::reason;
    switch (op.kind) {
    case op_kind::insert:
        if (op.position == 0 || op.position > w.size() + 1) throw script_error(reason::invalid_position, op_index);
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(op.position - 1), op.symbol);
        break;
    case op_kind::swap:
        if (op.position == 0 || op.position + 1 > w.size()) throw script_error(reason::invalid_position, op_index);
        if (w[op.position - 1] == w[op.position]) throw script_error(reason::equal_symbol_swap, op_index);
        std::swap(w[op.position - 1], w[op.position]);
        break;
    case op_kind::erase:
        if (op.position == 0 || op.position > w.size()) throw script_error(reason::invalid_position, op_index);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(op.position - 1));
        break;
    }
}

template <class Symbol>
std::basic_string<Symbol> apply_script(std::basic_string_view<Symbol> source, const basic_script<Symbol>& s) {
    std::basic_string<Symbol> w(source);
    for (std::size_t k = 0; k < s.ops.size(); ++k) apply_op(w, s.ops[k], k);
    return w;
}

inline std::u32string apply_script(std::u32string_view source, const script& s) {
    return apply_script<char32_t>(source, s);
}

struct script_verdict {
    bool valid = false;
    std::size_t cost = 0;
    std::size_t insert_count = 0;
    std::size_t swap_count = 0;
    std::size_t delete_count = 0;
    std::string failure;  // empty when valid
};

template <class Symbol>
script_verdict verify_script(std::basic_string_view<Symbol> source, std::basic_string_view<Symbol> target,
                             const basic_script<Symbol>& s) {
    script_verdict v;
    v.cost = s.total_cost();
    v.insert_count = s.count(op_kind::insert);
    v.swap_count = s.count(op_kind::swap);
    v.delete_count = s.count(op_kind::erase);
    try {
        if (apply_script(source, s) != target) {
            v.failure = "result differs from target";
            return v;
        }
    } catch (const script_error& e) {
        v.failure = e.what();
        return v;
    }
    v.valid = true;
    return v;
}

inline script_verdict verify_script(std::u32string_view source, std::u32string_view target, const script& s) {
    return verify_script<char32_t>(source, target, s);
}

// Reverses an insert/swap script from `short` to `long` into a delete/swap
// script from `long` to `short`.
template <class Symbol>
basic_script<Symbol> mirror_to_deletions(const basic_script<Symbol>& s) {
    basic_script<Symbol> out;
    out.ops.reserve(s.ops.size());
    for (auto it = s.ops.rbegin(); it != s.ops.rend(); ++it) {
        if (it->kind == op_kind::insert) {
            out.ops.push_back(basic_edit_op<Symbol>::erase(it->position));
        } else {
            out.ops.push_back(*it);
        }
    }
    return out;
}

}  // namespace sic
