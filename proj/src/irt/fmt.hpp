#pragma once

#include <charconv>
#include <string>
#include <string_view>

namespace irt {

// Shortest decimal string that round-trips the exact double (to_chars default).
inline std::string to_shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Fixed number of significant digits, scientific/fixed chosen by to_chars.
inline std::string to_digits(double v, int digits) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

// Double-quoted YAML scalar (escapes backslash and quote only).
inline std::string yaml_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '\\' || c == '"') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace irt
