#pragma once

// Shared text helpers for the file-format code. Not installed.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "kex/errors.hpp"

namespace kex::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

/// Splits a semicolon-joined list; an empty string yields an empty list.
inline std::vector<std::string> split_list(std::string_view s) {
    s = trim(s);
    if (s.empty()) {
        return {};
    }
    std::vector<std::string> out = split(s, ';');
    // A trailing separator would otherwise produce a phantom empty entry.
    while (!out.empty() && out.back().empty()) {
        out.pop_back();
    }
    return out;
}

inline std::string join(const std::vector<std::string>& items, char sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out.push_back(sep);
        out += items[i];
    }
    return out;
}

/// Shortest round-trippable decimal representation.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

inline double parse_double(std::string_view s, const std::string& context) {
    s = trim(s);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ValidationError(context + ": not a number: '" + std::string(s) + "'");
    }
    return v;
}

inline long long parse_int(std::string_view s, const std::string& context) {
    s = trim(s);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ValidationError(context + ": not an integer: '" + std::string(s) + "'");
    }
    return v;
}

inline bool parse_bool(std::string_view s, const std::string& context) {
    s = trim(s);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no" || s.empty()) return false;
    throw ValidationError(context + ": not a boolean: '" + std::string(s) + "'");
}

}  // namespace kex::detail
