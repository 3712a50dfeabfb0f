#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "sic/bench.hpp"
#include "sic/engine.hpp"
#include "sic/instance.hpp"
#include "sic/oracles.hpp"
#include "sic/problem.hpp"
#include "sic/script.hpp"
#include "sic/utf8.hpp"

namespace sic::cli {

namespace {

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct input_pair {
    std::u32string first;
    std::u32string second;
};

std::string strip_trailing_newline(std::string s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return strip_trailing_newline(ss.str());
}

input_pair resolve_inputs(const config& cfg, std::istream& in) {
    std::string a, b;
    switch (cfg.input) {
    case input_mode::positional:
    case input_mode::files:
        if (cfg.inputs.size() != 2) throw usage_error("expected exactly two inputs");
        a = cfg.input == input_mode::files ? read_file(cfg.inputs[0]) : cfg.inputs[0];
        b = cfg.input == input_mode::files ? read_file(cfg.inputs[1]) : cfg.inputs[1];
        break;
    case input_mode::stdin_lines:
        if (!cfg.inputs.empty()) throw usage_error("--stdin takes no positional inputs");
        if (!std::getline(in, a) || !std::getline(in, b)) throw usage_error("expected two lines on stdin");
        a = strip_trailing_newline(a);
        b = strip_trailing_newline(b);
        break;
    }
    if (cfg.bytes) return {bytes_as_symbols(a), bytes_as_symbols(b)};
    return {utf8_decode(a), utf8_decode(b)};
}

// (source, target) of the underlying swap-insert instance.
input_pair as_swap_insert(const config& cfg, input_pair p) {
    if (cfg.ops == ops_mode::swap_delete) std::swap(p.first, p.second);
    return p;
}

std::string symbol_text(char32_t c) { return utf8_encode(std::u32string_view(&c, 1)); }

std::string format_cost(const cost& c) { return c.finite() ? std::to_string(c.value()) : "unreachable"; }

std::string format_cost(const weighted_cost& c) { return c.finite() ? format_rational(c.value()) : "unreachable"; }

nlohmann::json cost_json(const cost& c) {
    if (c.finite()) return c.value();
    return nullptr;
}

void print_script_text(std::ostream& out, const script& s) {
    for (const auto& op : s.ops) {
        switch (op.kind) {
        case op_kind::insert: out << "ins " << op.position << ' ' << symbol_text(op.symbol) << '\n'; break;
        case op_kind::swap: out << "swap " << op.position << '\n'; break;
        case op_kind::erase: out << "del " << op.position << '\n'; break;
        }
    }
}

nlohmann::json script_json(const script& s) {
    auto arr = nlohmann::json::array();
    for (const auto& op : s.ops) {
        switch (op.kind) {
        case op_kind::insert:
            arr.push_back({{"op", "ins"}, {"pos", op.position}, {"symbol", symbol_text(op.symbol)}});
            break;
        case op_kind::swap: arr.push_back({{"op", "swap"}, {"pos", op.position}}); break;
        case op_kind::erase: arr.push_back({{"op", "del"}, {"pos", op.position}}); break;
        }
    }
    return arr;
}

nlohmann::json stats_json(const instance_stats& st, const alphabet_map& map) {
    nlohmann::json per_symbol = nlohmann::json::array();
    for (std::size_t a = 0; a < st.d; ++a) {
        per_symbol.push_back({{"symbol", symbol_text(map.raw_of(static_cast<symbol_code>(a + 1)))},
                              {"n", st.n_counts[a]},
                              {"m", st.m_counts[a]},
                              {"g", st.g_counts[a]}});
    }
    nlohmann::json plus = nlohmann::json::array();
    for (symbol_code a : st.sigma_plus) plus.push_back(symbol_text(map.raw_of(a)));
    return {{"n", st.n},   {"m", st.m},           {"d", st.d},
            {"g", st.g},   {"s", st.s},           {"feasible", st.feasible},
            {"symbols", per_symbol}, {"sigma_plus", plus}, {"predicted_state_bound", st.predicted_state_bound}};
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const instance_too_large& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::too_large;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::failure;
    }
}

}  // namespace

rational parse_rational(const std::string& text) {
    auto fail = [&]() -> rational { throw usage_error("invalid non-negative number: '" + text + "'"); };
    if (text.empty()) return fail();
    try {
        std::size_t used = 0;
        if (auto slash = text.find('/'); slash != std::string::npos) {
            const auto num = std::stoll(text.substr(0, slash), &used);
            if (used != slash) return fail();
            const auto den_text = text.substr(slash + 1);
            const auto den = std::stoll(den_text, &used);
            if (used != den_text.size() || den <= 0 || num < 0) return fail();
            return rational(num, den);
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            const auto whole_text = text.substr(0, dot);
            const auto frac_text = text.substr(dot + 1);
            if (frac_text.empty() || frac_text.size() > 12) return fail();
            for (char c : whole_text + frac_text) {
                if (c < '0' || c > '9') return fail();
            }
            std::int64_t scale = 1;
            for (std::size_t k = 0; k < frac_text.size(); ++k) scale *= 10;
            const std::int64_t whole = whole_text.empty() ? 0 : std::stoll(whole_text);
            return rational(whole * scale + std::stoll(frac_text), scale);
        }
        const auto v = std::stoll(text, &used);
        if (used != text.size() || v < 0) return fail();
        return rational(v);
    } catch (const std::logic_error&) {
        return fail();
    }
}

std::string format_rational(const rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int cmd_dist(const config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto raw = resolve_inputs(cfg, in);
        const auto pair = as_swap_insert(cfg, raw);
        const auto p = problem::make(pair.first, pair.second);
        const bool deletes = cfg.ops == ops_mode::swap_delete;

        engine_result result = deletes ? swap_delete_distance(p.target, p.source, cfg.emit_script)
                                       : swap_insert_engine(p.source, p.target).compute(cfg.emit_script);
        std::optional<script> raw_script;
        if (result.script) raw_script = to_raw(*result.script, p.map);
        const auto st = compute_stats(p.source, p.target);
        std::optional<weighted_cost> weighted;
        if (cfg.weighted) weighted = weighted_distance(p.source, p.target, cfg.c_ins, cfg.c_swap);

        if (cfg.json) {
            nlohmann::json j = {
                {"source", utf8_encode(raw.first)},
                {"target", utf8_encode(raw.second)},
                {"ops", deletes ? "swap-delete" : "swap-insert"},
                {"symbols", cfg.bytes ? "bytes" : "unicode"},
                {"distance", cost_json(result.distance)},
                {"unreachable", result.distance.is_unreachable()},
                {"memo_entries", result.memo_entries},
                {"stats", stats_json(st, p.map)},
                {"positions", "1-based"},
            };
            if (weighted) {
                j["weights"] = {{"c_ins", format_rational(cfg.c_ins)}, {"c_swap", format_rational(cfg.c_swap)}};
                j["weighted_distance"] =
                    weighted->finite() ? nlohmann::json(format_rational(weighted->value())) : nlohmann::json(nullptr);
            }
            if (raw_script) j["script"] = script_json(*raw_script);
            out << j.dump(2) << '\n';
        } else {
            out << "distance: " << format_cost(result.distance) << '\n';
            if (weighted) out << "weighted_distance: " << format_cost(*weighted) << '\n';
            out << "n: " << st.n << " m: " << st.m << " d: " << st.d << " g: " << st.g
                << " memo_entries: " << result.memo_entries << '\n';
            if (raw_script) {
                out << "script: " << raw_script->ops.size() << " ops\n";
                print_script_text(out, *raw_script);
            }
        }
        return result.distance.finite() ? exit_code::ok : exit_code::unreachable;
    });
}

int cmd_oracle(const config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto pair = as_swap_insert(cfg, resolve_inputs(cfg, in));
        const auto engine = swap_insert_correction(pair.first, pair.second).distance();
        const auto matching = matching_distance(pair.first, pair.second, cfg.combination_budget);
        const auto ucs = ucs_distance(pair.first, pair.second, cfg.state_budget);
        bool agree = engine == ucs && engine == matching;

        std::optional<weighted_cost> w_engine, w_ucs;
        if (cfg.weighted) {
            w_engine = weighted_swap_insert(pair.first, pair.second, cfg.c_ins, cfg.c_swap);
            w_ucs = ucs_distance(pair.first, pair.second, cfg.c_ins, cfg.c_swap, cfg.state_budget);
            agree = agree && *w_engine == *w_ucs;
        }

        if (cfg.json) {
            nlohmann::json j = {{"source", utf8_encode(pair.first)},
                                {"target", utf8_encode(pair.second)},
                                {"engine", cost_json(engine)},
                                {"ucs", cost_json(ucs)},
                                {"matching", cost_json(matching)},
                                {"agree", agree}};
            if (w_engine) {
                j["weighted_engine"] = format_cost(*w_engine);
                j["weighted_ucs"] = format_cost(*w_ucs);
            }
            out << j.dump(2) << '\n';
        } else {
            out << "engine=" << format_cost(engine) << " ucs=" << format_cost(ucs)
                << " matching=" << format_cost(matching);
            if (w_engine) out << " weighted_engine=" << format_cost(*w_engine) << " weighted_ucs=" << format_cost(*w_ucs);
            out << ' ' << (agree ? "AGREE" : "DISAGREE") << '\n';
        }
        return agree ? exit_code::ok : exit_code::disagree;
    });
}

int cmd_stats(const config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto pair = as_swap_insert(cfg, resolve_inputs(cfg, in));
        const auto p = problem::make(pair.first, pair.second);
        const auto st = compute_stats(p.source, p.target);
        if (cfg.json) {
            out << stats_json(st, p.map).dump(2) << '\n';
            return exit_code::ok;
        }
        out << "n=" << st.n << " m=" << st.m << " d=" << st.d << " g=" << st.g << " s=" << st.s << '\n';
        for (std::size_t a = 0; a < st.d; ++a) {
            out << "  " << symbol_text(p.map.raw_of(static_cast<symbol_code>(a + 1))) << ": n=" << st.n_counts[a]
                << " m=" << st.m_counts[a] << " g=" << st.g_counts[a] << '\n';
        }
        out << "sigma_plus={";
        for (std::size_t k = 0; k < st.sigma_plus.size(); ++k) {
            out << (k ? "," : "") << symbol_text(p.map.raw_of(st.sigma_plus[k]));
        }
        out << "}\n";
        out << "predicted_state_bound=" << st.predicted_state_bound << '\n';
        out << (st.feasible ? "feasible" : "infeasible") << '\n';
        return exit_code::ok;
    });
}

int cmd_bench(const config& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (cfg.ratio < 1.0) throw usage_error("--ratio must be at least 1");
        std::vector<generator_spec> sweep;
        for (std::size_t n : cfg.sizes) {
            generator_spec spec;
            spec.d = cfg.bench_alphabet;
            spec.n = n;
            spec.m = static_cast<std::size_t>(std::llround(static_cast<double>(n) * cfg.ratio));
            spec.profile = cfg.profile;
            spec.seed = cfg.seed;
            sweep.push_back(spec);
        }
        std::ofstream csv_file, json_file;
        std::ostream* csv = nullptr;
        std::ostream* json = nullptr;
        if (cfg.csv_path) {
            csv_file.open(*cfg.csv_path);
            if (!csv_file) throw std::runtime_error("cannot write " + *cfg.csv_path);
            csv = &csv_file;
        }
        if (cfg.json_path) {
            json_file.open(*cfg.json_path);
            if (!json_file) throw std::runtime_error("cannot write " + *cfg.json_path);
            json = &json_file;
        }
        if (!csv && !json) (cfg.json ? json : csv) = &out;
        const auto records = run_bench(sweep, csv, json, bench_options{cfg.repetitions});
        int status = exit_code::ok;
        for (const auto& r : records) {
            if (r.error) {
                err << "instance n=" << r.spec.n << " m=" << r.spec.m << ": " << *r.error << '\n';
                status = exit_code::failure;
            }
        }
        return status;
    });
}

int cmd_selftest(const config& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (cfg.selftest_alphabet == 0 || cfg.selftest_alphabet > 26) throw usage_error("--alphabet must be in [1, 26]");
        std::vector<std::u32string> by_length{U""};
        std::vector<std::u32string> all{U""};
        for (std::size_t len = 1; len <= std::max(cfg.max_n, cfg.max_m); ++len) {
            std::vector<std::u32string> next;
            for (const auto& w : by_length) {
                for (std::size_t a = 0; a < cfg.selftest_alphabet; ++a) next.push_back(w + generated_symbol(a));
            }
            by_length = std::move(next);
            all.insert(all.end(), by_length.begin(), by_length.end());
        }
        std::size_t pairs = 0, distance_failures = 0, script_failures = 0, symmetry_failures = 0;
        for (const auto& s : all) {
            if (s.size() > cfg.max_n) continue;
            for (const auto& l : all) {
                if (l.size() > cfg.max_m) continue;
                ++pairs;
                const auto engine = swap_insert_correction(s, l, true);
                const auto ucs = ucs_distance(s, l, cfg.state_budget);
                const auto matching = matching_distance(s, l, cfg.combination_budget);
                if (!(engine.distance() == ucs && engine.distance() == matching)) {
                    ++distance_failures;
                    if (distance_failures <= 5) {
                        err << "mismatch on (" << utf8_encode(s) << ", " << utf8_encode(l)
                            << "): engine=" << format_cost(engine.distance()) << " ucs=" << format_cost(ucs)
                            << " matching=" << format_cost(matching) << '\n';
                    }
                }
                if (engine.distance().finite()) {
                    const auto v = verify_script(s, l, *engine.raw_script);
                    if (!v.valid || static_cast<std::int64_t>(v.cost) != engine.distance().value() ||
                        v.insert_count != l.size() - s.size()) {
                        ++script_failures;
                    }
                }
                if (!(swap_delete_correction(l, s).distance() == engine.distance())) ++symmetry_failures;
            }
        }
        const bool pass = distance_failures == 0 && script_failures == 0 && symmetry_failures == 0;
        out << "exhaustive oracle equivalence: " << pairs << " pairs, " << distance_failures << " mismatches\n";
        out << "script soundness: " << script_failures << " failures\n";
        out << "swap-delete symmetry: " << symmetry_failures << " failures\n";
        out << (pass ? "PASS" : "FAIL") << '\n';
        return pass ? exit_code::ok : exit_code::failure;
    });
}

int run(const config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    if (cfg.subcommand == "dist") return cmd_dist(cfg, in, out, err);
    if (cfg.subcommand == "oracle") return cmd_oracle(cfg, in, out, err);
    if (cfg.subcommand == "stats") return cmd_stats(cfg, in, out, err);
    if (cfg.subcommand == "bench") return cmd_bench(cfg, out, err);
    if (cfg.subcommand == "selftest") return cmd_selftest(cfg, out, err);
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return exit_code::usage;
}

}  // namespace sic::cli
