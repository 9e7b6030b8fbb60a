#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itbatch/io.hpp"

namespace itbatch::detail {

struct Line {
    std::size_t number;
    std::string_view text;
};

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        lines.push_back({number++, text.substr(0, nl)});
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

[[noreturn]] inline void fail_at(std::string_view source, std::size_t line, const std::string& why) {
    throw DataError(std::string(source) + ":" + std::to_string(line) + ": " + why);
}

inline std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

inline std::optional<std::uint64_t> parse_unsigned(std::string_view s) {
    s = trim(s);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

// True if the line is a "# schema=N" marker; throws on an unsupported N.
inline bool consume_schema_line(const Line& line, std::string_view source) {
    std::string_view t = trim(line.text);
    if (!t.starts_with('#')) return false;
    t = trim(t.substr(1));
    if (!t.starts_with("schema=")) return false;
    const auto version = parse_unsigned(t.substr(7));
    if (!version || *version != static_cast<std::uint64_t>(kSchemaVersion)) {
        fail_at(source, line.number, "unsupported schema '" + std::string(t) + "'");
    }
    return true;
}

inline std::vector<std::string_view> split_fields(std::string_view s) {
    std::vector<std::string_view> fields;
    while (true) {
        const auto comma = s.find(',');
        fields.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return fields;
}

}  // namespace itbatch::detail
