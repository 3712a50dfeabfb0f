#pragma once

// Swap-Insert correction distance by memoized recursion over states
// (i, j, c): S[i..n] with the first c_a occurrences of each a ignored,
// to be corrected into L[j..m].
//
// Evaluation order per state:
//   i = n+1          -> m - j + 1 insertions
//   j = m+1          -> 0 if every remaining source symbol is ignored
//   c_{S[i]} > 0     -> skip S[i]
//   S[i] = L[j]      -> match
//   otherwise        -> min(insert L[j], move the next live L[j] of S leftwards)
//
// The recursion runs on an explicit stack; depth reaches n + m.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sic/alphabet.hpp"
#include "sic/cost.hpp"
#include "sic/errors.hpp"
#include "sic/script.hpp"
#include "sic/state_codec.hpp"

namespace sic {

struct engine_result {
    cost distance;
    std::size_t memo_entries = 0;
    std::optional<code_script> script;

    // Diagnostics.
    std::vector<symbol_code> symbol_order;
    std::size_t active_symbols = 0;  // s = |{a : g_a > 0}|
    std::size_t states_expanded = 0;
    std::size_t insert_branches = 0;
    std::size_t swap_branches = 0;
};

// Optional instrumentation, called for every expanded state and for every
// memo insertion.
struct engine_observer {
    std::function<void(const search_state&)> on_expand;
    std::function<void(const search_state&, const state_key&)> on_memo_insert;
};

inline bool feasible(const indexed_string& source, const indexed_string& target) {
    for (symbol_code a = 1; a <= source.alphabet_size(); ++a) {
        if (source.symbol_count(a) > target.symbol_count(a)) return false;
    }
    return true;
}

class swap_insert_engine {
public:
    swap_insert_engine(const indexed_string& source, const indexed_string& target, engine_observer observer = {})
        : s_(source), l_(target), observer_(std::move(observer)) {
        if (source.alphabet_size() != target.alphabet_size()) {
            throw std::invalid_argument("strings indexed over different alphabets");
        }
    }

    engine_result distance() { return run(false); }

    // Script attached only when the distance is finite.
    engine_result compute(bool with_script) { return run(with_script); }

    // Value of one state (i, j, c), for a feasible instance. The memo is
    // shared across calls on the same engine.
    cost evaluate_state(search_state st) {
        if (!feasible(s_, l_)) throw std::logic_error("evaluate_state on an infeasible instance");
        if (st.c.size() != d() || st.i == 0 || st.i > n() + 1 || st.j == 0 || st.j > m() + 1) {
            throw std::invalid_argument("state out of range");
        }
        if (!codec_) codec_.emplace(s_, l_);
        engine_result scratch;
        return evaluate(std::move(st), scratch);
    }

    engine_result distance_with_script() {
        auto result = run(true);
        if (result.distance.is_unreachable()) throw script_unavailable();
        return result;
    }

private:
    struct child {
        search_state state;
        std::int64_t add = 0;
    };

    // Either an immediate value or up to two children whose values are
    // combined by min(child value + add).
    struct expansion {
        std::optional<cost> immediate;
        child children[2];
        std::size_t child_count = 0;
    };

    struct frame {
        explicit frame(search_state st) : state(std::move(st)) {}

        search_state state;
        std::optional<std::uint64_t> key;
        expansion exp;
        cost results[2];
        std::size_t next = 0;
        bool expanded = false;
    };

    std::size_t n() const { return s_.size(); }
    std::size_t m() const { return l_.size(); }
    std::size_t d() const { return s_.alphabet_size(); }

    std::optional<cost> base_value(const search_state& st) const {
        if (st.i == n() + 1) {
            const bool all_zero = std::all_of(st.c.begin(), st.c.end(), [](auto v) { return v == 0; });
            return all_zero ? cost(static_cast<std::int64_t>(m() - st.j + 1)) : cost::unreachable();
        }
        if (st.j == m() + 1) {
            std::size_t ignored = 0;
            for (auto v : st.c) ignored += v;
            return ignored == n() - st.i + 1 ? cost(0) : cost::unreachable();
        }
        return std::nullopt;
    }

    struct branch_options {
        bool can_insert = false;
        std::optional<std::size_t> swap_from;  // r
        std::int64_t swap_cost = 0;            // (r - i) - delta
    };

    // Mismatch case at (i, j, c) with c_{S[i]} = 0 and S[i] != L[j].
    branch_options options_at(const search_state& st) const {
        const symbol_code beta = l_[st.j];
        branch_options opt;
        opt.can_insert = st.c[beta - 1] == 0 && s_.count(st.i, beta) < l_.count(st.j, beta);
        opt.swap_from = s_.select(s_.rank(st.i, beta) + st.c[beta - 1] + 1, beta);
        if (opt.swap_from) {
            const std::size_t r = *opt.swap_from;
            std::size_t delta = 0;
            for (symbol_code theta = 1; theta <= d(); ++theta) {
                const std::uint32_t c_theta = st.c[theta - 1];
                if (c_theta == 0) continue;
                delta += std::min<std::size_t>(c_theta, s_.rank(r, theta) - s_.rank(st.i - 1, theta));
            }
            opt.swap_cost = static_cast<std::int64_t>(r - st.i) - static_cast<std::int64_t>(delta);
        }
        return opt;
    }

    expansion expand(const search_state& st, engine_result& stats) const {
        expansion e;
        if (auto v = base_value(st)) {
            e.immediate = *v;
            return e;
        }
        const symbol_code alpha = s_[st.i];
        const symbol_code beta = l_[st.j];
        if (st.c[alpha - 1] > 0) {
            search_state next = st;
            next.i += 1;
            next.c[alpha - 1] -= 1;
            e.children[e.child_count++] = {std::move(next), 0};
            return e;
        }
        if (alpha == beta) {
            search_state next = st;
            next.i += 1;
            next.j += 1;
            e.children[e.child_count++] = {std::move(next), 0};
            return e;
        }
        const branch_options opt = options_at(st);
        if (opt.can_insert) {
            ++stats.insert_branches;
            search_state next = st;
            next.j += 1;
            e.children[e.child_count++] = {std::move(next), 1};
        }
        if (opt.swap_from) {
            ++stats.swap_branches;
            search_state next = st;
            next.j += 1;
            next.c[beta - 1] += 1;
            e.children[e.child_count++] = {std::move(next), opt.swap_cost};
        }
        if (e.child_count == 0) e.immediate = cost::unreachable();
        return e;
    }

    std::optional<std::uint64_t> memo_slot(const search_state& st) const {
        if (!codec_->needs_table() || base_value(st)) return std::nullopt;
        return codec_->pack(codec_->encode(st.i, st.j, st.c));
    }

    engine_result run(bool with_script) {
        engine_result result;
        memo_.clear();
        codec_.reset();
        // Degenerate inputs, including sources sharing no symbol with the
        // target, are settled by counts alone before any recursion.
        if (!feasible(s_, l_)) {
            result.distance = cost::unreachable();
            return result;
        }
        codec_.emplace(s_, l_);
        if (codec_->needs_table() && !codec_->table_size()) {
            throw instance_too_large("state table does not fit in 64-bit keys");
        }
        result.symbol_order = codec_->order();
        result.active_symbols = codec_->active_symbols();

        search_state root{1, 1, counter_vector(d(), 0)};
        result.distance = evaluate(std::move(root), result);
        result.memo_entries = memo_.size();
        if (with_script && result.distance.finite()) result.script = reconstruct();
        return result;
    }

    cost evaluate(search_state root, engine_result& stats) {
        std::vector<frame> stack;
        stack.emplace_back(std::move(root));
        cost answer;
        auto deliver = [&](cost v) {
            if (stack.empty()) {
                answer = v;
                return;
            }
            frame& parent = stack.back();
            const std::size_t slot = parent.next - 1;
            parent.results[slot] = v + cost(parent.exp.children[slot].add);
        };
        while (!stack.empty()) {
            frame& f = stack.back();
            if (!f.expanded) {
                f.expanded = true;
                f.key = memo_slot(f.state);
                if (f.key) {
                    if (auto it = memo_.find(*f.key); it != memo_.end()) {
                        const cost v = it->second;
                        stack.pop_back();
                        deliver(v);
                        continue;
                    }
                }
                ++stats.states_expanded;
                if (observer_.on_expand) observer_.on_expand(f.state);
                f.exp = expand(f.state, stats);
                if (f.exp.immediate) {
                    const cost v = *f.exp.immediate;
                    store(f);
                    stack.pop_back();
                    deliver(v);
                    continue;
                }
            }
            if (f.next < f.exp.child_count) {
                search_state child_state = f.exp.children[f.next].state;
                ++f.next;
                stack.emplace_back(std::move(child_state));  // invalidates f
                continue;
            }
            cost v = f.results[0];
            for (std::size_t k = 1; k < f.exp.child_count; ++k) v = min(v, f.results[k]);
            f.exp.immediate = v;
            store(f);
            stack.pop_back();
            deliver(v);
        }
        return answer;
    }

    void store(const frame& f) {
        if (!f.key) return;
        memo_.emplace(*f.key, *f.exp.immediate);
        if (observer_.on_memo_insert) observer_.on_memo_insert(f.state, codec_->encode(f.state.i, f.state.j, f.state.c));
    }

    cost lookup(const search_state& st) const {
        if (auto v = base_value(st)) return *v;
        auto it = memo_.find(codec_->pack(codec_->encode(st.i, st.j, st.c)));
        if (it == memo_.end()) throw std::logic_error("reconstruction reached an unevaluated state");
        return it->second;
    }

    // Replays the optimal decisions from (1, 1, 0). The working string is
    // always L[1..j-1] followed by the live symbols of S[i..n], so L[j] is
    // placed at working position j. Ties prefer the insertion.
    code_script reconstruct() const {
        code_script out;
        search_state st{1, 1, counter_vector(d(), 0)};
        while (true) {
            if (st.i == n() + 1) {
                for (std::size_t j = st.j; j <= m(); ++j) out.ops.push_back(basic_edit_op<symbol_code>::insert(j, l_[j]));
                break;
            }
            if (st.j == m() + 1) break;
            const symbol_code alpha = s_[st.i];
            const symbol_code beta = l_[st.j];
            if (st.c[alpha - 1] > 0) {
                st.c[alpha - 1] -= 1;
                st.i += 1;
                continue;
            }
            if (alpha == beta) {
                st.i += 1;
                st.j += 1;
                continue;
            }
            const branch_options opt = options_at(st);
            bool take_insert = opt.can_insert;
            if (opt.can_insert && opt.swap_from) {
                search_state ins = st, swp = st;
                ins.j += 1;
                swp.j += 1;
                swp.c[beta - 1] += 1;
                const cost via_insert = cost(1) + lookup(ins);
                const cost via_swap = cost(opt.swap_cost) + lookup(swp);
                take_insert = via_insert <= via_swap;
            } else if (!opt.can_insert && !opt.swap_from) {
                throw std::logic_error("reconstruction reached a dead state");
            }
            if (take_insert) {
                out.ops.push_back(basic_edit_op<symbol_code>::insert(st.j, beta));
                st.j += 1;
            } else {
                // Live position of S[r] in the working string, moved down to j.
                const auto from = st.j - 1 + static_cast<std::size_t>(opt.swap_cost) + 1;
                for (std::size_t pos = from - 1; pos >= st.j; --pos) {
                    out.ops.push_back(basic_edit_op<symbol_code>::swap(pos));
                }
                st.c[beta - 1] += 1;
                st.j += 1;
            }
        }
        return out;
    }

    const indexed_string& s_;
    const indexed_string& l_;
    engine_observer observer_;
    std::optional<state_codec> codec_;
    std::unordered_map<std::uint64_t, cost> memo_;
};

inline engine_result distance(const indexed_string& source, const indexed_string& target) {
    return swap_insert_engine(source, target).distance();
}

inline engine_result distance_with_script(const indexed_string& source, const indexed_string& target) {
    return swap_insert_engine(source, target).distance_with_script();
}

// Every correction uses exactly m - n insertions, so weighted costs follow
// from the unit-cost distance.
inline weighted_cost weighted_distance(const indexed_string& source, const indexed_string& target, rational c_ins,
                                       rational c_swap) {
    if (c_ins < 0 || c_swap < 0) throw std::invalid_argument("operation costs must be non-negative");
    const auto r = distance(source, target);
    if (r.distance.is_unreachable()) return weighted_cost::unreachable();
    const auto inserts = static_cast<std::int64_t>(target.size() - source.size());
    const auto swaps = r.distance.value() - inserts;
    return weighted_cost(c_ins * inserts + c_swap * swaps);
}

// Deletions + swaps from `longer` to `shorter`: the mirror of swap-insert
// from `shorter` to `longer`. Inserts in the script become deletions.
inline engine_result swap_delete_distance(const indexed_string& longer, const indexed_string& shorter,
                                          bool with_script = false) {
    engine_result r = swap_insert_engine(shorter, longer).compute(with_script);
    if (r.script) r.script = mirror_to_deletions(*r.script);
    return r;
}

}  // namespace sic
