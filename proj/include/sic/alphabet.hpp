#pragma once

// Dense alphabet mapping and constant-time rank/select over symbol strings.
//
// Positions are 1-based: rank(i, a) counts occurrences of a in X[1..i] and
// select(k, a) returns the position of the k-th occurrence of a. Symbol codes
// live in [1..d].

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sic/errors.hpp"

namespace sic {

using symbol_code = std::uint32_t;

inline constexpr std::size_t max_alphabet_size = std::size_t{1} << 16;

class alphabet_map {
public:
    alphabet_map() = default;

    // Codes are assigned by first occurrence, scanning target then source.
    static alphabet_map build(std::u32string_view source, std::u32string_view target) {
        alphabet_map map;
        for (auto view : {target, source}) {
            for (char32_t raw : view) {
                if (map.code_of_.contains(raw)) continue;
                if (map.raw_of_.size() == max_alphabet_size) {
                    throw std::length_error("alphabet exceeds 65536 distinct symbols");
                }
                map.raw_of_.push_back(raw);
                map.code_of_.emplace(raw, static_cast<symbol_code>(map.raw_of_.size()));
            }
        }
        return map;
    }

    std::size_t size() const noexcept { return raw_of_.size(); }

    bool contains(char32_t raw) const { return code_of_.contains(raw); }

    symbol_code code_of(char32_t raw) const {
        auto it = code_of_.find(raw);
        if (it == code_of_.end()) throw unknown_symbol(raw);
        return it->second;
    }

    char32_t raw_of(symbol_code code) const {
        if (code == 0 || code > raw_of_.size()) throw std::out_of_range("symbol code out of range");
        return raw_of_[code - 1];
    }

    // Raw symbols in code order.
    const std::vector<char32_t>& symbols() const noexcept { return raw_of_; }

    std::vector<symbol_code> encode(std::u32string_view raw) const {
        std::vector<symbol_code> out;
        out.reserve(raw.size());
        for (char32_t c : raw) out.push_back(code_of(c));
        return out;
    }

    std::u32string decode(const std::vector<symbol_code>& codes) const {
        std::u32string out;
        out.reserve(codes.size());
        for (symbol_code c : codes) out.push_back(raw_of(c));
        return out;
    }

private:
    std::vector<char32_t> raw_of_;
    std::unordered_map<char32_t, symbol_code> code_of_;
};

inline alphabet_map build_alphabet(std::u32string_view source, std::u32string_view target) {
    return alphabet_map::build(source, target);
}

// A code sequence with a full d x (|X|+1) prefix-count table and per-symbol
// occurrence lists. Immutable after construction.
class indexed_string {
public:
    indexed_string() = default;

    indexed_string(std::vector<symbol_code> symbols, std::size_t alphabet_size)
        : symbols_(std::move(symbols)), d_(alphabet_size), rank_(d_ * (symbols_.size() + 1), 0),
          select_(d_), counts_(d_, 0) {
        const std::size_t stride = symbols_.size() + 1;
        for (std::size_t p = 1; p <= symbols_.size(); ++p) {
            const symbol_code a = symbols_[p - 1];
            if (a == 0 || a > d_) throw std::out_of_range("symbol code out of range");
            select_[a - 1].push_back(static_cast<std::uint32_t>(p));
            ++counts_[a - 1];
        }
        for (std::size_t a = 0; a < d_; ++a) {
            std::uint32_t* row = rank_.data() + a * stride;
            for (std::size_t p = 1; p <= symbols_.size(); ++p) {
                row[p] = row[p - 1] + (symbols_[p - 1] == a + 1 ? 1u : 0u);
            }
        }
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    std::size_t alphabet_size() const noexcept { return d_; }

    symbol_code operator[](std::size_t position) const { return symbols_[position - 1]; }

    symbol_code at(std::size_t position) const {
        if (position == 0 || position > symbols_.size()) throw std::out_of_range("position out of range");
        return symbols_[position - 1];
    }

    const std::vector<symbol_code>& symbols() const noexcept { return symbols_; }

    std::size_t rank(std::size_t i, symbol_code a) const {
        check_code(a);
        if (i > symbols_.size()) throw std::out_of_range("rank position out of range");
        return rank_[(a - 1) * (symbols_.size() + 1) + i];
    }

    std::optional<std::size_t> select(std::size_t k, symbol_code a) const {
        check_code(a);
        if (k == 0) throw std::out_of_range("select occurrence index must be >= 1");
        const auto& occ = select_[a - 1];
        if (k > occ.size()) return std::nullopt;
        return occ[k - 1];
    }

    // Occurrences of a in X[i..|X|].
    std::size_t count(std::size_t i, symbol_code a) const {
        if (i == 0 || i > symbols_.size() + 1) throw std::out_of_range("count position out of range");
        return rank(symbols_.size(), a) - rank(i - 1, a);
    }

    std::size_t symbol_count(symbol_code a) const {
        check_code(a);
        return counts_[a - 1];
    }

    const std::vector<std::size_t>& symbol_counts() const noexcept { return counts_; }

    // Table dimensions, exposed for space accounting.
    std::size_t rank_table_rows() const noexcept { return d_; }
    std::size_t rank_table_columns() const noexcept { return symbols_.size() + 1; }
    std::size_t rank_table_cells() const noexcept { return rank_.size(); }

private:
    void check_code(symbol_code a) const {
        if (a == 0 || a > d_) throw std::out_of_range("symbol code out of range");
    }

    std::vector<symbol_code> symbols_;
    std::size_t d_ = 0;
    std::vector<std::uint32_t> rank_;
    std::vector<std::vector<std::uint32_t>> select_;
    std::vector<std::size_t> counts_;
};

inline indexed_string index_string(std::u32string_view raw, const alphabet_map& map) {
    return indexed_string(map.encode(raw), map.size());
}

}  // namespace sic
