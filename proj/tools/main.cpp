#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

void add_input_options(CLI::App* cmd, sic::cli::config& cfg, bool& files, bool& from_stdin) {
    cmd->add_option("inputs", cfg.inputs, "Source and target strings (or file paths with --files)");
    cmd->add_flag("--files", files, "Read each input from a file (trailing newline stripped)");
    cmd->add_flag("--stdin", from_stdin, "Read the two inputs as lines from standard input");
    cmd->add_flag("--bytes", cfg.bytes, "Treat every byte as a symbol instead of decoding UTF-8");
    cmd->add_flag("--json", cfg.json, "Emit a JSON report");
    cmd->add_option_function<std::string>(
        "--ops",
        [&cfg](const std::string& v) {
            cfg.ops = v == "swap-delete" ? sic::cli::ops_mode::swap_delete : sic::cli::ops_mode::swap_insert;
        },
        "Operation set")
        ->check(CLI::IsMember({"swap-insert", "swap-delete"}));
}

void add_weight_options(CLI::App* cmd, sic::cli::config& cfg) {
    cmd->add_option_function<std::string>(
        "--c-ins", [&cfg](const std::string& v) { cfg.c_ins = sic::cli::parse_rational(v), cfg.weighted = true; },
        "Insertion cost (integer, a/b or decimal)");
    cmd->add_option_function<std::string>(
        "--c-swap", [&cfg](const std::string& v) { cfg.c_swap = sic::cli::parse_rational(v), cfg.weighted = true; },
        "Swap cost (integer, a/b or decimal)");
}

}  // namespace

int main(int argc, char** argv) {
    sic::cli::config cfg;
    bool files = false, from_stdin = false;

    CLI::App app{"Swap-Insert correction distance"};
    app.require_subcommand(1);

    auto* dist = app.add_subcommand("dist", "Compute the correction distance");
    add_input_options(dist, cfg, files, from_stdin);
    add_weight_options(dist, cfg);
    dist->add_flag("--script", cfg.emit_script, "Print an optimal correction script (1-based positions)");

    auto* oracle = app.add_subcommand("oracle", "Compare the engine against both brute-force oracles");
    add_input_options(oracle, cfg, files, from_stdin);
    add_weight_options(oracle, cfg);
    oracle->add_option_function<std::size_t>(
        "--budget", [&cfg](std::size_t b) { cfg.state_budget = cfg.combination_budget = b; },
        "State and combination budget of the oracles");

    auto* stats = app.add_subcommand("stats", "Print instance difficulty measures");
    add_input_options(stats, cfg, files, from_stdin);

    auto* bench = app.add_subcommand("bench", "Benchmark generated instances (CSV or JSON)");
    bench->add_option_function<std::string>(
             "--profile", [&cfg](const std::string& v) { cfg.profile = *sic::parse_profile(v); }, "Imbalance profile")
        ->check(CLI::IsMember({"zero-g", "balanced-g", "max-g"}));
    bench->add_option("--sizes", cfg.sizes, "Comma-separated source lengths")->delimiter(',');
    bench->add_option("--alphabet", cfg.bench_alphabet, "Alphabet size")->check(CLI::PositiveNumber);
    bench->add_option("--ratio", cfg.ratio, "Target length as a multiple of the source length");
    bench->add_option("--seed", cfg.seed, "Generator seed");
    bench->add_option("--repetitions", cfg.repetitions, "Timed runs per instance (median reported)");
    bench->add_option("--csv", cfg.csv_path, "Write CSV records to this file");
    bench->add_option("--json-out", cfg.json_path, "Write JSON records to this file");
    bench->add_flag("--json", cfg.json, "Print JSON instead of CSV on standard output");

    auto* selftest = app.add_subcommand("selftest", "Exhaustive small-instance oracle equivalence");
    selftest->add_option("--max-n", cfg.max_n, "Largest source length");
    selftest->add_option("--max-m", cfg.max_m, "Largest target length");
    selftest->add_option("--alphabet", cfg.selftest_alphabet, "Alphabet size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return sic::cli::exit_code::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sic::cli::exit_code::usage;
    }

    if (files && from_stdin) {
        std::cerr << "error: --files and --stdin are mutually exclusive\n";
        return sic::cli::exit_code::usage;
    }
    cfg.input = files ? sic::cli::input_mode::files
                      : (from_stdin ? sic::cli::input_mode::stdin_lines : sic::cli::input_mode::positional);
    cfg.subcommand = app.get_subcommands().front()->get_name();
    return sic::cli::run(cfg, std::cin, std::cout, std::cerr);
}
