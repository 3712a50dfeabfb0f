#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sic {

class encoding_error : public std::runtime_error {
public:
    explicit encoding_error(const std::string& what) : std::runtime_error(what) {}
};

// Strict UTF-8 decoding into unicode scalar values.
inline std::u32string utf8_decode(std::string_view in) {
    std::u32string out;
    out.reserve(in.size());
    std::size_t p = 0;
    while (p < in.size()) {
        const auto b0 = static_cast<unsigned char>(in[p]);
        std::size_t len = 0;
        char32_t cp = 0;
        char32_t min = 0;
        if (b0 < 0x80) {
            len = 1, cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2, cp = b0 & 0x1F, min = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3, cp = b0 & 0x0F, min = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4, cp = b0 & 0x07, min = 0x10000;
        } else {
            throw encoding_error("invalid UTF-8 lead byte at offset " + std::to_string(p));
        }
        if (p + len > in.size()) throw encoding_error("truncated UTF-8 sequence at offset " + std::to_string(p));
        for (std::size_t k = 1; k < len; ++k) {
            const auto b = static_cast<unsigned char>(in[p + k]);
            if ((b & 0xC0) != 0x80) throw encoding_error("invalid UTF-8 continuation at offset " + std::to_string(p + k));
            cp = (cp << 6) | (b & 0x3F);
        }
        if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            throw encoding_error("invalid code point at offset " + std::to_string(p));
        }
        out.push_back(cp);
        p += len;
    }
    return out;
}

inline std::string utf8_encode(std::u32string_view in) {
    std::string out;
    out.reserve(in.size());
    for (char32_t cp : in) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

// One symbol per byte.
inline std::u32string bytes_as_symbols(std::string_view in) {
    std::u32string out;
    out.reserve(in.size());
    for (char c : in) out.push_back(static_cast<unsigned char>(c));
    return out;
}

}  // namespace sic
