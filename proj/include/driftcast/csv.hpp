#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "driftcast/format.hpp"
#include "driftcast/types.hpp"

namespace driftcast {

namespace detail {

inline std::optional<double> parse_cell(std::string_view token, std::size_t line) {
    token = trim(token);
    if (token.empty() || token == "-")
        return std::nullopt;
    return parse_value(token, line);
}

inline std::vector<std::string> read_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

}  // namespace detail

/// Parses a pollutant table: header `Date,<names...>` then one row per day.
/// "-" or an empty cell is a missing reading. The header defines the schema.
inline Dataset parse_csv(std::string_view text) {
    const auto lines = detail::read_lines(text);
    std::size_t line_no = 0;

    // Header.
    std::vector<std::string> header;
    std::size_t header_line = 0;
    for (; header_line < lines.size(); ++header_line) {
        if (detail::trim(lines[header_line]).empty()) continue;
        header = split_csv_line(lines[header_line], header_line + 1);
        break;
    }
    if (header.empty())
        throw ParseError("missing header row");
    if (header.size() < 2 || !detail::iequals(detail::trim(header.front()), "Date"))
        throw ParseError("header must start with 'Date' followed by attribute names",
                         header_line + 1);
    std::vector<std::string> names(header.begin() + 1, header.end());
    for (auto& n : names) n = std::string(detail::trim(n));
    AttributeSchema schema = [&] {
        try {
            return AttributeSchema(names);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), header_line + 1);
        }
    }();

    Dataset ds{schema, {}};
    for (line_no = header_line + 1; line_no < lines.size(); ++line_no) {
        const auto& raw = lines[line_no];
        if (detail::trim(raw).empty()) continue;
        const auto fields = split_csv_line(raw, line_no + 1);
        if (fields.size() != schema.arity() + 1)
            throw ParseError("expected " + std::to_string(schema.arity() + 1) +
                                 " columns, found " + std::to_string(fields.size()),
                             line_no + 1);
        PollutantRecord rec;
        rec.date = parse_date(fields[0], line_no + 1);
        rec.values.reserve(schema.arity());
        for (std::size_t i = 1; i < fields.size(); ++i)
            rec.values.push_back(detail::parse_cell(fields[i], line_no + 1));
        ds.records.push_back(std::move(rec));
    }
    return ds;
}

/// Parses against an expected schema; the header must match it exactly.
inline Dataset parse_csv(std::string_view text, const AttributeSchema& schema) {
    Dataset ds = parse_csv(text);
    if (ds.schema != schema)
        throw ParseError("header attributes do not match the expected schema");
    return ds;
}

/// Serializes a dataset. Missing readings become "-"; values keep at most six
/// fractional digits. parse_csv(write_csv(ds)) == ds for such datasets.
inline std::string write_csv(const Dataset& ds) {
    std::ostringstream out;
    out << "Date";
    for (const auto& name : ds.schema.names()) out << ',' << name;
    out << '\n';
    for (const auto& rec : ds.records) {
        out << format_date(rec.date);
        for (const auto& v : rec.values)
            out << ',' << (v ? format_value(*v) : std::string("-"));
        out << '\n';
    }
    return out.str();
}

}  // namespace driftcast
