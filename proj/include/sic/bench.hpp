#pragma once

// Reproducible benchmark sweeps over generated instances.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sic/engine.hpp"
#include "sic/instance.hpp"
#include "sic/problem.hpp"

namespace sic {

struct bench_record {
    generator_spec spec;
    std::int64_t g = 0;
    std::size_t s = 0;
    cost distance;
    std::size_t memo_entries = 0;
    std::uint64_t predicted_bound = 0;
    std::uint64_t wall_time_ns = 0;
    std::optional<std::string> error;
};

struct bench_options {
    std::size_t repetitions = 5;
};

inline constexpr const char* bench_csv_header =
    "d,n,m,g,s,profile,seed,distance,memo_entries,predicted_bound,wall_time_ns";

inline std::string distance_field(const bench_record& r) {
    if (r.error) return "error";
    return r.distance.finite() ? std::to_string(r.distance.value()) : "unreachable";
}

inline void write_csv_row(std::ostream& os, const bench_record& r) {
    os << r.spec.d << ',' << r.spec.n << ',' << r.spec.m << ',' << r.g << ',' << r.s << ',' << to_string(r.spec.profile)
       << ',' << r.spec.seed << ',' << distance_field(r) << ',' << r.memo_entries << ',' << r.predicted_bound << ','
       << r.wall_time_ns << '\n';
}

inline nlohmann::json to_json(const bench_record& r) {
    nlohmann::json j = {
        {"d", r.spec.d},
        {"n", r.spec.n},
        {"m", r.spec.m},
        {"g", r.g},
        {"s", r.s},
        {"profile", to_string(r.spec.profile)},
        {"seed", r.spec.seed},
        {"distance", nullptr},
        {"memo_entries", r.memo_entries},
        {"predicted_bound", r.predicted_bound},
        {"wall_time_ns", r.wall_time_ns},
    };
    if (r.distance.finite()) j["distance"] = r.distance.value();
    if (r.error) j["error"] = *r.error;
    return j;
}

// Times the full computation (alphabet, indexes, engine) on a fresh memo;
// the reported time is the median over the repetitions.
inline bench_record bench_instance(const generator_spec& spec, const bench_options& options = {}) {
    bench_record rec;
    rec.spec = spec;
    try {
        const auto inst = generate_instance(spec);
        const auto stats = compute_stats(inst.source, inst.target);
        rec.g = stats.g;
        rec.s = stats.s;
        rec.predicted_bound = stats.predicted_state_bound;

        std::vector<std::uint64_t> times;
        for (std::size_t k = 0; k < std::max<std::size_t>(1, options.repetitions); ++k) {
            const auto start = std::chrono::steady_clock::now();
            const auto result = swap_insert_correction(inst.source, inst.target);
            const auto stop = std::chrono::steady_clock::now();
            times.push_back(static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
            rec.distance = result.distance();
            rec.memo_entries = result.detail.memo_entries;
        }
        std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
        rec.wall_time_ns = times[times.size() / 2];
        if (rec.memo_entries > rec.predicted_bound) rec.error = "memo entries exceed the predicted state bound";
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

// Runs every spec in order. A failing instance is recorded with its error
// and the sweep continues.
inline std::vector<bench_record> run_bench(const std::vector<generator_spec>& sweep, std::ostream* csv = nullptr,
                                           std::ostream* json = nullptr, const bench_options& options = {}) {
    std::vector<bench_record> records;
    if (csv) *csv << bench_csv_header << '\n';
    for (const auto& spec : sweep) {
        records.push_back(bench_instance(spec, options));
        if (csv) write_csv_row(*csv, records.back());
    }
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        *json << arr.dump(2) << '\n';
    }
    return records;
}

}  // namespace sic
