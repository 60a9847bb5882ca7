#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "driftcast/csv.hpp"
#include "driftcast/format.hpp"
#include "driftcast/types.hpp"

namespace driftcast {

namespace detail {

inline std::string strip_quotes(std::string_view token) {
    if (token.size() >= 2 &&
        ((token.front() == '\'' && token.back() == '\'') ||
         (token.front() == '"' && token.back() == '"')))
        token = token.substr(1, token.size() - 2);
    return std::string(token);
}

}  // namespace detail

/// Parses the dense numeric ARFF subset: @relation, @attribute declarations
/// (one optional `date` column plus `numeric`/`real`/`integer` columns), then
/// @data rows. `%` starts a comment line; `?` and `-` mark missing readings.
/// When no date attribute is declared, rows are dated consecutively from
/// 1/1/2009. Sparse rows and other attribute types are rejected.
inline Dataset parse_arff(std::string_view text) {
    const auto lines = detail::read_lines(text);

    bool saw_relation = false;
    bool in_data = false;
    std::vector<std::string> names;          // numeric attributes, declaration order
    std::vector<bool> is_date_column;        // per declared attribute
    int date_column = -1;
    Dataset ds;
    std::vector<PollutantRecord> records;

    const auto column_count = [&] { return is_date_column.size(); };

    std::size_t row_index = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto line = detail::trim(lines[i]);
        if (line.empty() || line.front() == '%') continue;

        if (!in_data && line.front() == '@') {
            const auto space = line.find_first_of(" \t");
            const auto directive = line.substr(0, space);
            if (detail::iequals(directive, "@relation")) {
                saw_relation = true;
            } else if (detail::iequals(directive, "@attribute")) {
                if (!saw_relation)
                    throw ParseError("@attribute before @relation", line_no);
                if (space == std::string_view::npos)
                    throw ParseError("malformed @attribute declaration", line_no);
                auto rest = detail::trim(line.substr(space));
                const auto name_end = rest.find_first_of(" \t");
                if (name_end == std::string_view::npos)
                    throw ParseError("@attribute declaration missing a type", line_no);
                const std::string name = detail::strip_quotes(rest.substr(0, name_end));
                auto type = detail::trim(rest.substr(name_end));
                const auto type_end = type.find_first_of(" \t");
                const auto type_word = type.substr(0, type_end);
                if (detail::iequals(type_word, "date")) {
                    if (date_column >= 0)
                        throw ParseError("multiple date attributes are not supported", line_no);
                    date_column = static_cast<int>(column_count());
                    is_date_column.push_back(true);
                } else if (detail::iequals(type_word, "numeric") ||
                           detail::iequals(type_word, "real") ||
                           detail::iequals(type_word, "integer")) {
                    names.push_back(name);
                    is_date_column.push_back(false);
                } else {
                    throw ParseError("unsupported attribute type '" + std::string(type_word) +
                                         "' for attribute '" + name + "'",
                                     line_no);
                }
            } else if (detail::iequals(directive, "@data")) {
                if (names.empty())
                    throw ParseError("no numeric attributes declared", line_no);
                ds.schema = AttributeSchema(names);
                in_data = true;
            } else {
                throw ParseError("unsupported directive '" + std::string(directive) + "'",
                                 line_no);
            }
            continue;
        }

        if (!in_data)
            throw ParseError("data row before @data marker", line_no);
        if (line.front() == '@')
            throw ParseError("unexpected directive in data section", line_no);
        if (line.front() == '{')
            throw ParseError("sparse ARFF rows are not supported", line_no);

        const auto fields = split_csv_line(line, line_no);
        if (fields.size() != column_count())
            throw ParseError("expected " + std::to_string(column_count()) +
                                 " attributes, found " + std::to_string(fields.size()),
                             line_no);
        PollutantRecord rec;
        if (date_column < 0) {
            using namespace std::chrono;
            rec.date = Date{sys_days{Date{year{2009}, January, day{1}}} + days{row_index}};
        }
        for (std::size_t col = 0; col < fields.size(); ++col) {
            const auto token = detail::trim(fields[col]);
            if (static_cast<int>(col) == date_column) {
                rec.date = parse_date(token, line_no);
            } else if (token == "?" || token == "-" || token.empty()) {
                rec.values.push_back(std::nullopt);
            } else {
                rec.values.push_back(parse_value(token, line_no));
            }
        }
        records.push_back(std::move(rec));
        ++row_index;
    }

    if (!in_data)
        throw ParseError("missing @data marker");
    ds.records = std::move(records);
    return ds;
}

}  // namespace driftcast
