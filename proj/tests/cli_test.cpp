#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "sic/problem.hpp"
#include "sic/utf8.hpp"

namespace {

using namespace sic::cli;

struct outcome {
    int status;
    std::string out;
    std::string err;
};

outcome invoke(const config& cfg, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int status = run(cfg, in, out, err);
    return {status, out.str(), err.str()};
}

config make(const std::string& sub, std::vector<std::string> inputs = {}) {
    config cfg;
    cfg.subcommand = sub;
    cfg.inputs = std::move(inputs);
    return cfg;
}

TEST(CliDist, ScriptOutput) {
    auto cfg = make("dist", {"ba", "aab"});
    cfg.emit_script = true;
    const auto r = invoke(cfg);
    EXPECT_EQ(r.status, exit_code::ok);
    EXPECT_NE(r.out.find("distance: 2\n"), std::string::npos);
    EXPECT_NE(r.out.find("script: 2 ops\n"), std::string::npos);
    EXPECT_NE(r.out.find("ins "), std::string::npos);
    EXPECT_NE(r.out.find("swap "), std::string::npos);
}

TEST(CliDist, UnreachableExitsTwo) {
    const auto r = invoke(make("dist", {"aa", "a"}));
    EXPECT_EQ(r.status, exit_code::unreachable);
    EXPECT_NE(r.out.find("unreachable"), std::string::npos);
}

TEST(CliDist, SwapDelete) {
    auto cfg = make("dist", {"aab", "ba"});
    cfg.ops = ops_mode::swap_delete;
    cfg.emit_script = true;
    const auto r = invoke(cfg);
    EXPECT_EQ(r.status, exit_code::ok);
    EXPECT_NE(r.out.find("distance: 2\n"), std::string::npos);
    EXPECT_NE(r.out.find("del "), std::string::npos);
}

TEST(CliDist, Weighted) {
    auto cfg = make("dist", {"ba", "aab"});
    cfg.weighted = true;
    cfg.c_ins = parse_rational("2");
    cfg.c_swap = parse_rational("3");
    const auto r = invoke(cfg);
    EXPECT_NE(r.out.find("weighted_distance: 5\n"), std::string::npos);
}

TEST(CliDist, ExitCodeIndependentOfFormat) {
    for (auto inputs : {std::vector<std::string>{"ba", "aab"}, std::vector<std::string>{"aa", "a"}}) {
        auto text = make("dist", inputs);
        auto json = text;
        json.json = true;
        EXPECT_EQ(invoke(text).status, invoke(json).status);
    }
}

TEST(CliDist, JsonRoundTrip) {
    for (auto inputs : {std::vector<std::string>{"ba", "aab"}, std::vector<std::string>{"héllo", "ohéllo"},
                        std::vector<std::string>{"aa", "a"}}) {
        auto cfg = make("dist", inputs);
        cfg.json = true;
        cfg.emit_script = true;
        const auto r = invoke(cfg);
        const auto j = nlohmann::json::parse(r.out);
        const auto s = sic::utf8_decode(j.at("source").get<std::string>());
        const auto l = sic::utf8_decode(j.at("target").get<std::string>());
        const auto recomputed = sic::swap_insert_correction(s, l).distance();
        if (recomputed.finite()) {
            EXPECT_EQ(j.at("distance").get<std::int64_t>(), recomputed.value());
            EXPECT_EQ(j.at("script").size(), static_cast<std::size_t>(recomputed.value()));
        } else {
            EXPECT_TRUE(j.at("distance").is_null());
            EXPECT_TRUE(j.at("unreachable").get<bool>());
        }
    }
}

TEST(CliDist, BytesModeTreatsEachByteAsASymbol) {
    auto cfg = make("dist", {"é", "éé"});
    cfg.bytes = true;
    const auto bytes = invoke(cfg);
    EXPECT_NE(bytes.out.find("d: 2"), std::string::npos);
    const auto unicode = invoke(make("dist", {"é", "éé"}));
    EXPECT_NE(unicode.out.find("d: 1"), std::string::npos);
}

TEST(CliDist, InvalidUtf8IsAFailure) {
    EXPECT_EQ(invoke(make("dist", {"\xff", "a"})).status, exit_code::failure);
}

TEST(CliDist, StdinAndFiles) {
    auto cfg = make("dist");
    cfg.input = input_mode::stdin_lines;
    EXPECT_NE(invoke(cfg, "ba\naab\n").out.find("distance: 2"), std::string::npos);
    EXPECT_EQ(invoke(cfg, "ba\n").status, exit_code::usage);

    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "sic_cli_test_a.txt";
    const auto b = dir / "sic_cli_test_b.txt";
    std::ofstream(a) << "ba\n";
    std::ofstream(b) << "aab\n";
    auto files = make("dist", {a.string(), b.string()});
    files.input = input_mode::files;
    EXPECT_NE(invoke(files).out.find("distance: 2"), std::string::npos);
    std::filesystem::remove(a);
    std::filesystem::remove(b);

    auto missing = make("dist", {(dir / "sic_missing_1").string(), (dir / "sic_missing_2").string()});
    missing.input = input_mode::files;
    EXPECT_EQ(invoke(missing).status, exit_code::failure);
}

TEST(CliDist, WrongArgumentCount) {
    EXPECT_EQ(invoke(make("dist", {"a"})).status, exit_code::usage);
}

TEST(CliOracle, Examples) {
    const auto ok = invoke(make("oracle", {"ba", "aab"}));
    EXPECT_EQ(ok.status, exit_code::ok);
    EXPECT_EQ(ok.out, "engine=2 ucs=2 matching=2 AGREE\n");

    const auto unreachable = invoke(make("oracle", {"aa", "a"}));
    EXPECT_EQ(unreachable.status, exit_code::ok);
    EXPECT_EQ(unreachable.out, "engine=unreachable ucs=unreachable matching=unreachable AGREE\n");

    const auto big = invoke(make("oracle", {std::string(30, 'a') + std::string(30, 'b'),
                                            std::string(60, 'b') + std::string(60, 'a')}));
    EXPECT_EQ(big.status, exit_code::too_large);
}

TEST(CliStats, Example) {
    const auto r = invoke(make("stats", {"aab", "aaabab"}));
    EXPECT_EQ(r.status, exit_code::ok);
    EXPECT_NE(r.out.find("g=2"), std::string::npos);
    EXPECT_NE(r.out.find("feasible"), std::string::npos);
}

TEST(CliBench, TwoCsvRecords) {
    auto cfg = make("bench");
    cfg.sizes = {1000, 10000};
    cfg.repetitions = 1;
    const auto r = invoke(cfg);
    EXPECT_EQ(r.status, exit_code::ok);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    EXPECT_EQ(lines, 3u);
}

TEST(CliSelftest, SmallExhaustiveRunPasses) {
    auto cfg = make("selftest");
    cfg.max_n = 3;
    cfg.max_m = 4;
    const auto r = invoke(cfg);
    EXPECT_EQ(r.status, exit_code::ok);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, UnknownSubcommand) {
    EXPECT_EQ(invoke(make("frobnicate")).status, exit_code::usage);
}

TEST(ParseRational, Forms) {
    EXPECT_EQ(parse_rational("3"), sic::rational(3));
    EXPECT_EQ(parse_rational("3/2"), sic::rational(3, 2));
    EXPECT_EQ(parse_rational("1.25"), sic::rational(5, 4));
    EXPECT_EQ(parse_rational("0"), sic::rational(0));
    for (const char* bad : {"", "-1", "1/0", "x", "1.", "2/-3", "1.2.3"}) {
        EXPECT_ANY_THROW(parse_rational(bad)) << bad;
    }
    EXPECT_EQ(format_rational(sic::rational(6, 4)), "3/2");
}

}  // namespace
