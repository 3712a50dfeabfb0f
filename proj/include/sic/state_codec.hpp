#pragma once

// Compressed memo keys for states (i, j, c) of the swap-insert recursion.
//
// For each symbol a let t_a be the number of insertions of a made on the
// recursion path; then c_a + t_a = rank(L, j-1, a) - rank(S, i-1, a), so a
// state is determined by i, j and one of (c_a, t_a) per symbol. We keep
// x_a = c_a when n_a <= m_a - n_a and x_a = t_a otherwise, which bounds
// x_a by g_a = min(n_a, m_a - n_a). Symbols are reordered so that the s
// symbols with g_a > 0 come first, by increasing g_a.
//
//   s == d : key (p, i, k, x without x_p) where p is a symbol with c_p = 0
//   s <  d : key (i, k, x_1..x_s); every other x_a is zero
//
// with k = (j - i) - sum(r). Both directions cost O(d).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sic/alphabet.hpp"
#include "sic/errors.hpp"

namespace sic {

using counter_vector = std::vector<std::uint32_t>;

struct state_key {
    symbol_code p = 0;  // 0 when omitted (s < d)
    std::size_t i = 1;
    std::size_t k = 0;
    std::vector<std::uint32_t> r;

    friend bool operator==(const state_key&, const state_key&) = default;
};

struct search_state {
    std::size_t i = 1;
    std::size_t j = 1;
    counter_vector c;

    friend bool operator==(const search_state&, const search_state&) = default;
};

class state_codec {
public:
    state_codec(const indexed_string& source, const indexed_string& target) : s_(&source), l_(&target) {
        d_ = source.alphabet_size();
        if (target.alphabet_size() != d_) throw std::invalid_argument("strings indexed over different alphabets");
        g_.resize(d_);
        use_counter_.resize(d_);
        for (symbol_code a = 1; a <= d_; ++a) {
            const auto n_a = static_cast<std::int64_t>(source.symbol_count(a));
            const auto m_a = static_cast<std::int64_t>(target.symbol_count(a));
            if (n_a > m_a) throw std::invalid_argument("state codec requires a feasible instance");
            g_[a - 1] = static_cast<std::uint32_t>(std::min(n_a, m_a - n_a));
            use_counter_[a - 1] = n_a <= m_a - n_a;
            k_max_ += static_cast<std::size_t>(m_a) - g_[a - 1];
        }
        order_.resize(d_);
        std::iota(order_.begin(), order_.end(), symbol_code{1});
        std::stable_sort(order_.begin(), order_.end(), [&](symbol_code a, symbol_code b) {
            const bool pa = g_[a - 1] > 0, pb = g_[b - 1] > 0;
            if (pa != pb) return pa;
            return g_[a - 1] < g_[b - 1];
        });
        s_count_ = static_cast<std::size_t>(
            std::count_if(g_.begin(), g_.end(), [](std::uint32_t g) { return g > 0; }));
        compute_table_size();
    }

    std::size_t alphabet_size() const noexcept { return d_; }
    // Number of symbols with g_a > 0.
    std::size_t active_symbols() const noexcept { return s_count_; }
    bool needs_table() const noexcept { return s_count_ > 0; }
    bool tracks_p() const noexcept { return s_count_ == d_ && d_ > 0; }
    const std::vector<symbol_code>& order() const noexcept { return order_; }
    std::uint32_t imbalance(symbol_code a) const { return g_[a - 1]; }
    std::size_t k_max() const noexcept { return k_max_; }

    // Number of cells of the dense table the keys index into; nullopt if it
    // does not fit in 64 bits. Zero when no table is needed.
    std::optional<std::uint64_t> table_size() const noexcept { return table_size_; }

    state_key encode(std::size_t i, std::size_t j, std::span<const std::uint32_t> c) const {
        const std::size_t n = s_->size(), m = l_->size();
        if (c.size() != d_ || i == 0 || i > n + 1 || j == 0 || j > m + 1) {
            throw std::invalid_argument("state out of range");
        }
        state_key key;
        key.i = i;
        if (tracks_p()) {
            for (symbol_code a : order_) {
                if (c[a - 1] == 0) {
                    key.p = a;
                    break;
                }
            }
            if (key.p == 0) throw std::logic_error("state has no zero counter");
        }
        const std::size_t width = tracks_p() ? d_ - 1 : s_count_;
        key.r.reserve(width);
        std::size_t r_sum = 0;
        for (std::size_t idx = 0; idx < (tracks_p() ? d_ : s_count_); ++idx) {
            const symbol_code a = order_[idx];
            if (a == key.p) continue;
            const std::uint32_t x = coordinate(a, i, j, c[a - 1]);
            key.r.push_back(x);
            r_sum += x;
        }
        if (!tracks_p()) {
            for (std::size_t idx = s_count_; idx < d_; ++idx) {
                const symbol_code a = order_[idx];
                if (coordinate(a, i, j, c[a - 1]) != 0) throw std::logic_error("nonzero coordinate for a balanced symbol");
            }
        } else {
            // x_p is implied by c_p = 0; still validate its range.
            (void)coordinate(key.p, i, j, 0);
        }
        if (j - i < r_sum) throw std::logic_error("negative k");
        key.k = (j - i) - r_sum;
        if (key.k > k_max_) throw std::logic_error("k exceeds its range");
        return key;
    }

    search_state decode(const state_key& key) const {
        const std::size_t n = s_->size(), m = l_->size();
        const std::size_t width = tracks_p() ? d_ - 1 : s_count_;
        if (key.r.size() != width) throw malformed_key("wrong number of coordinates");
        if (key.i == 0 || key.i > n + 1) throw malformed_key("i out of range");
        if (key.k > k_max_) throw malformed_key("k out of range");
        if (tracks_p() ? (key.p == 0 || key.p > d_) : key.p != 0) throw malformed_key("p out of range");

        std::vector<std::uint32_t> x(d_, 0);
        std::size_t r_sum = 0, pos = 0;
        for (std::size_t idx = 0; idx < (tracks_p() ? d_ : s_count_); ++idx) {
            const symbol_code a = order_[idx];
            if (a == key.p) continue;
            const std::uint32_t v = key.r[pos++];
            if (v > g_[a - 1]) throw malformed_key("coordinate exceeds its imbalance");
            x[a - 1] = v;
            r_sum += v;
        }
        search_state st;
        st.i = key.i;
        st.j = key.i + key.k + r_sum;
        if (st.j > m + 1) throw malformed_key("j out of range");
        st.c.assign(d_, 0);
        for (symbol_code a = 1; a <= d_; ++a) {
            const auto e = static_cast<std::int64_t>(l_->rank(st.j - 1, a)) -
                           static_cast<std::int64_t>(s_->rank(st.i - 1, a));
            std::int64_t c_a = 0;
            if (a == key.p) {
                c_a = 0;
            } else if (use_counter_[a - 1]) {
                c_a = x[a - 1];
            } else {
                c_a = e - x[a - 1];
            }
            const std::int64_t t_a = e - c_a;
            if (c_a < 0 || t_a < 0) throw malformed_key("key does not describe a reachable state");
            if (c_a > static_cast<std::int64_t>(s_->count(st.i, a))) throw malformed_key("counter exceeds remaining symbols");
            st.c[a - 1] = static_cast<std::uint32_t>(c_a);
        }
        return st;
    }

    // Mixed-radix packing of a key into [0, table_size).
    std::uint64_t pack(const state_key& key) const {
        if (!table_size_) throw std::logic_error("table too large to pack keys");
        std::uint64_t value = 0;
        std::size_t pos = key.r.size();
        for (std::size_t idx = (tracks_p() ? d_ : s_count_); idx-- > 0;) {
            const symbol_code a = order_[idx];
            if (a == key.p) continue;
            value = value * (g_[a - 1] + 1ull) + key.r[--pos];
        }
        value = value * (k_max_ + 1ull) + key.k;
        value = value * (s_->size() + 1ull) + (key.i - 1);
        if (tracks_p()) value = value * d_ + (key.p - 1);
        return value;
    }

private:
    std::uint32_t coordinate(symbol_code a, std::size_t i, std::size_t j, std::uint32_t c_a) const {
        const auto e = static_cast<std::int64_t>(l_->rank(j - 1, a)) - static_cast<std::int64_t>(s_->rank(i - 1, a));
        const std::int64_t t_a = e - c_a;
        if (t_a < 0) throw std::logic_error("negative insertion count");
        const std::int64_t x = use_counter_[a - 1] ? c_a : t_a;
        if (x > g_[a - 1]) throw std::logic_error("coordinate exceeds its imbalance");
        return static_cast<std::uint32_t>(x);
    }

    void compute_table_size() {
        if (s_count_ == 0) {
            table_size_ = 0;
            return;
        }
        unsigned __int128 size = (s_->size() + 1ull);
        size *= (k_max_ + 1ull);
        if (tracks_p()) size *= d_;
        // The omitted coordinate is always the one with smallest g (order_[0])
        // in the worst case.
        for (std::size_t idx = tracks_p() ? 1 : 0; idx < s_count_; ++idx) {
            size *= (g_[order_[idx] - 1] + 1ull);
            if (size > std::numeric_limits<std::uint64_t>::max()) {
                table_size_.reset();
                return;
            }
        }
        if (size > std::numeric_limits<std::uint64_t>::max()) {
            table_size_.reset();
            return;
        }
        table_size_ = static_cast<std::uint64_t>(size);
    }

    const indexed_string* s_;
    const indexed_string* l_;
    std::size_t d_ = 0;
    std::size_t s_count_ = 0;
    std::size_t k_max_ = 0;
    std::vector<std::uint32_t> g_;
    std::vector<bool> use_counter_;
    std::vector<symbol_code> order_;
    std::optional<std::uint64_t> table_size_;
};

}  // namespace sic
