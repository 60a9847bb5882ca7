#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace driftcast {

/// Calendar date at day precision. Comparisons and arithmetic come from <chrono>.
using Date = std::chrono::year_month_day;

/// Input error carrying the 1-based line number of the offending text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    explicit ParseError(const std::string& message) : std::runtime_error(message), line_(0) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Ordered attribute names of a pollutant table. Names are unique and non-empty;
/// arity is always >= 1. Default-constructed schemas carry the four standard
/// pollutant attributes.
class AttributeSchema {
public:
    AttributeSchema() : names_{"CO2", "RPM", "SO2", "NOx"} {}

    explicit AttributeSchema(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw std::invalid_argument("schema requires at least one attribute");
        std::unordered_set<std::string> seen;
        for (const auto& name : names_) {
            if (name.empty())
                throw std::invalid_argument("schema attribute names must be non-empty");
            if (!seen.insert(name).second)
                throw std::invalid_argument("duplicate schema attribute name: " + name);
        }
    }

    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t arity() const noexcept { return names_.size(); }

    bool operator==(const AttributeSchema&) const = default;

private:
    std::vector<std::string> names_;
};

/// One day's observation: a date plus one optional reading per schema attribute.
/// A disengaged component is a missing reading.
struct PollutantRecord {
    Date date{};
    std::vector<std::optional<double>> values;

    bool complete() const {
        return std::all_of(values.begin(), values.end(),
                           [](const auto& v) { return v.has_value(); });
    }

    bool operator==(const PollutantRecord&) const = default;
};

/// Ordered collection of records conforming to one schema. Record order is the
/// file order; dates need not be sorted or unique.
struct Dataset {
    AttributeSchema schema;
    std::vector<PollutantRecord> records;

    bool operator==(const Dataset&) const = default;
};

/// Weather category derived from a cluster's dominant pollutant attribute.
struct WeatherCategory {
    std::string dominant;
    std::string description;

    bool operator==(const WeatherCategory&) const = default;
};

}  // namespace driftcast
