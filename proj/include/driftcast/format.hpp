#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "driftcast/types.hpp"

namespace driftcast {

/// Fixed-point rendering with the given fractional digit count.
inline std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

/// Value rendering for CSV cells: up to six fractional digits, trailing zeros
/// (and a bare trailing point) trimmed, so integers print as integers.
inline std::string format_value(double value) {
    std::string s = format_fixed(value, 6);
    auto last = s.find_last_not_of('0');
    if (last != std::string::npos && s[last] == '.')
        --last;
    s.erase(last + 1);
    return s;
}

/// Dates render as D/M/YYYY without zero padding, as in the source tables.
inline std::string format_date(const Date& date) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%u/%u/%d", static_cast<unsigned>(date.day()),
                  static_cast<unsigned>(date.month()), static_cast<int>(date.year()));
    return buf;
}

namespace detail {

inline std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    return text;
}

inline bool all_digits(std::string_view token) {
    if (token.empty()) return false;
    for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

}  // namespace detail

/// Parses D/M/YYYY (one- or two-digit day and month accepted).
inline Date parse_date(std::string_view token, std::size_t line) {
    token = detail::trim(token);
    const auto first = token.find('/');
    const auto second = token.find('/', first == std::string_view::npos ? first : first + 1);
    if (first == std::string_view::npos || second == std::string_view::npos ||
        token.find('/', second + 1) != std::string_view::npos)
        throw ParseError("malformed date '" + std::string(token) + "' (expected D/M/YYYY)", line);

    const auto day_s = token.substr(0, first);
    const auto month_s = token.substr(first + 1, second - first - 1);
    const auto year_s = token.substr(second + 1);
    if (!detail::all_digits(day_s) || !detail::all_digits(month_s) ||
        !detail::all_digits(year_s) || day_s.size() > 2 || month_s.size() > 2 ||
        year_s.size() != 4)
        throw ParseError("malformed date '" + std::string(token) + "' (expected D/M/YYYY)", line);

    unsigned day = 0, month = 0;
    int year = 0;
    std::from_chars(day_s.data(), day_s.data() + day_s.size(), day);
    std::from_chars(month_s.data(), month_s.data() + month_s.size(), month);
    std::from_chars(year_s.data(), year_s.data() + year_s.size(), year);

    const Date date{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
    if (!date.ok())
        throw ParseError("invalid calendar date '" + std::string(token) + "'", line);
    return date;
}

/// Parses a non-negative finite numeric token. Rejects signs, NaN and infinity.
inline double parse_value(std::string_view token, std::size_t line) {
    token = detail::trim(token);
    if (token.empty())
        throw ParseError("empty numeric field", line);
    if (token.front() == '-' || token.front() == '+')
        throw ParseError("negative or signed value '" + std::string(token) + "'", line);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value))
        throw ParseError("non-numeric value '" + std::string(token) + "'", line);
    return value;
}

/// Splits one CSV line into fields. Double-quoted fields may contain commas;
/// embedded quotes are doubled per RFC 4180.
inline std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no = 0) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"' && current.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    if (quoted)
        throw ParseError("unterminated quoted field", line_no);
    fields.push_back(std::move(current));
    return fields;
}

/// Joins fields into one CSV line, quoting any field containing a comma or quote.
inline std::string join_csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) line += ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"") != std::string::npos) {
            line += '"';
            for (char c : f) {
                if (c == '"') line += '"';
                line += c;
            }
            line += '"';
        } else {
            line += f;
        }
    }
    return line;
}

/// Collapses a category phrase to a comparison token: lowercase, punctuation
/// and whitespace runs folded to single spaces.
inline std::string normalize_category(std::string_view text) {
    std::string token;
    bool pending_space = false;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            if (pending_space && !token.empty()) token += ' ';
            pending_space = false;
            token += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else {
            pending_space = true;
        }
    }
    return token;
}

}  // namespace driftcast
