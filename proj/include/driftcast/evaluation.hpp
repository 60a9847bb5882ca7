#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "driftcast/csv.hpp"
#include "driftcast/format.hpp"
#include "driftcast/labeling.hpp"
#include "driftcast/types.hpp"

namespace driftcast {

/// Actual category per date, keyed for forecast matching. Dates are unique;
/// categories are matched on normalized tokens.
struct GroundTruth {
    std::map<Date, std::string> entries;
};

/// CSV form: date,category. Duplicate dates are an error.
inline GroundTruth parse_truth_csv(std::string_view text) {
    const auto lines = detail::read_lines(text);
    GroundTruth truth;
    bool saw_header = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (detail::trim(lines[i]).empty()) continue;
        const auto fields = split_csv_line(lines[i], line_no);
        if (!saw_header) {
            if (fields.size() != 2 || !detail::iequals(detail::trim(fields[0]), "date"))
                throw ParseError("expected header 'date,category'", line_no);
            saw_header = true;
            continue;
        }
        if (fields.size() != 2)
            throw ParseError("expected 2 columns, found " + std::to_string(fields.size()),
                             line_no);
        const Date date = parse_date(fields[0], line_no);
        if (!truth.entries.emplace(date, fields[1]).second)
            throw ParseError("duplicate date " + format_date(date), line_no);
    }
    if (!saw_header)
        throw ParseError("missing header row");
    return truth;
}

/// Matched-records accuracy as a percentage: 100 * matched / total.
inline double accuracy(std::size_t matched, std::size_t total) {
    if (total == 0)
        throw std::invalid_argument("accuracy requires at least one record");
    if (matched > total)
        throw std::invalid_argument("matched count exceeds total");
    return 100.0 * static_cast<double>(matched) / static_cast<double>(total);
}

struct CategoryCount {
    std::size_t matched = 0;
    std::size_t total = 0;

    bool operator==(const CategoryCount&) const = default;
};

struct EvaluationReport {
    std::size_t matched = 0;
    std::size_t total = 0;
    double accuracy_percent = 0.0;
    std::map<std::string, CategoryCount> per_category;  // keyed by normalized truth token
};

/// Scores forecasts against ground truth. A forecast matches when its
/// normalized category token equals the truth's token for that date; every
/// forecast date must be present in the truth.
inline EvaluationReport evaluate(const std::vector<Forecast>& forecasts,
                                 const GroundTruth& truth) {
    EvaluationReport report;
    report.total = forecasts.size();
    for (const auto& f : forecasts) {
        const auto it = truth.entries.find(f.date);
        if (it == truth.entries.end())
            throw std::invalid_argument("no ground truth for forecast date " +
                                        format_date(f.date));
        const std::string truth_token = normalize_category(it->second);
        auto& bucket = report.per_category[truth_token];
        ++bucket.total;
        if (normalize_category(f.category) == truth_token) {
            ++bucket.matched;
            ++report.matched;
        }
    }
    report.accuracy_percent = report.total == 0 ? 0.0 : accuracy(report.matched, report.total);
    return report;
}

inline std::string report_to_text(const EvaluationReport& report) {
    std::ostringstream out;
    out << "matched " << report.matched << " of " << report.total << " records, accuracy "
        << format_fixed(report.accuracy_percent, 4) << "%\n";
    for (const auto& [category, count] : report.per_category)
        out << "  " << category << ": " << count.matched << "/" << count.total << '\n';
    return out.str();
}

inline nlohmann::json report_to_json(const EvaluationReport& report) {
    nlohmann::json per_category(nlohmann::json::value_t::object);
    for (const auto& [category, count] : report.per_category)
        per_category[category] = {{"matched", count.matched}, {"total", count.total}};
    return {{"matched", report.matched},
            {"total", report.total},
            {"accuracy_percent", report.accuracy_percent},
            {"per_category", per_category}};
}

}  // namespace driftcast
