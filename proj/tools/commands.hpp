#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sic/cost.hpp"
#include "sic/instance.hpp"
#include "sic/oracles.hpp"

namespace sic::cli {

enum class input_mode { positional, files, stdin_lines };
enum class ops_mode { swap_insert, swap_delete };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int unreachable = 2;
inline constexpr int too_large = 3;
inline constexpr int disagree = 4;
inline constexpr int failure = 5;
}  // namespace exit_code

struct config {
    std::string subcommand;
    input_mode input = input_mode::positional;
    std::vector<std::string> inputs;  // strings, or file paths with input_mode::files
    ops_mode ops = ops_mode::swap_insert;
    rational c_ins{1};
    rational c_swap{1};
    bool weighted = false;  // true when either cost was given explicitly
    bool json = false;
    bool emit_script = false;
    bool bytes = false;

    std::size_t state_budget = default_state_budget;
    std::size_t combination_budget = default_combination_budget;

    // bench
    std::uint64_t seed = 1;
    imbalance_profile profile = imbalance_profile::zero_g;
    std::vector<std::size_t> sizes{1000, 10000};
    std::size_t bench_alphabet = 4;
    double ratio = 1.0;        // m = round(n * ratio)
    std::size_t repetitions = 5;
    std::optional<std::string> csv_path;
    std::optional<std::string> json_path;

    // selftest
    std::size_t max_n = 4;
    std::size_t max_m = 6;
    std::size_t selftest_alphabet = 2;
};

// Parses "3", "3/2" or "1.25" into a non-negative rational.
rational parse_rational(const std::string& text);
std::string format_rational(const rational& r);

int cmd_dist(const config& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_oracle(const config& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_stats(const config& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_bench(const config& cfg, std::ostream& out, std::ostream& err);
int cmd_selftest(const config& cfg, std::ostream& out, std::ostream& err);

int run(const config& cfg, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sic::cli
