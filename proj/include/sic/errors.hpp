#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sic {

class unknown_symbol : public std::invalid_argument {
public:
    explicit unknown_symbol(char32_t symbol)
        : std::invalid_argument("symbol U+" + to_hex(symbol) + " has no code in the alphabet map"),
          symbol_(symbol) {}

    char32_t symbol() const noexcept { return symbol_; }

private:
    static std::string to_hex(char32_t v) {
        static constexpr char digits[] = "0123456789ABCDEF";
        std::string out;
        for (int shift = 20; shift >= 0; shift -= 4) out.push_back(digits[(v >> shift) & 0xF]);
        return out;
    }

    char32_t symbol_;
};

class script_unavailable : public std::runtime_error {
public:
    script_unavailable() : std::runtime_error("no correction script exists: distance is unreachable") {}
};

class instance_too_large : public std::runtime_error {
public:
    explicit instance_too_large(const std::string& what) : std::runtime_error(what) {}
};

class infeasible_profile : public std::invalid_argument {
public:
    explicit infeasible_profile(const std::string& what) : std::invalid_argument(what) {}
};

class malformed_key : public std::invalid_argument {
public:
    explicit malformed_key(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an edit operation cannot be applied to the working string.
class script_error : public std::runtime_error {
public:
    enum class reason { invalid_position, equal_symbol_swap };

    script_error(reason why, std::size_t op_index)
        : std::runtime_error(describe(why, op_index)), reason_(why), op_index_(op_index) {}

    reason why() const noexcept { return reason_; }
    std::size_t op_index() const noexcept { return op_index_; }

private:
    static std::string describe(reason why, std::size_t op_index) {
        const char* what = why == reason::invalid_position ? "invalid position" : "swap of two equal symbols";
        return std::string(what) + " at operation " + std::to_string(op_index);
    }

    reason reason_;
    std::size_t op_index_;
};

}  // namespace sic
