#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "driftcast/clustering.hpp"
#include "driftcast/csv.hpp"
#include "driftcast/format.hpp"
#include "driftcast/incremental.hpp"
#include "driftcast/types.hpp"

namespace driftcast {

/// Canonical weather category per dominant pollutant attribute.
inline const std::map<std::string, std::string>& default_category_map() {
    static const std::map<std::string, std::string> map{
        {"CO2", "hot, smogy and humid"},
        {"RPM", "dusty, fly ash, smogy, fog, Mist"},
        {"NOx", "Hot, dry and smogy"},
        {"SO2", "hot, smogy and chance of acid rain"},
    };
    return map;
}

namespace detail {

inline WeatherCategory category_for(const std::string& attribute) {
    const auto& map = default_category_map();
    const auto it = map.find(attribute);
    if (it == map.end())
        throw std::invalid_argument("no weather category defined for attribute '" +
                                    attribute + "'");
    return WeatherCategory{attribute, it->second};
}

}  // namespace detail

/// Labels every cluster with the category of its dominant attribute: the
/// argmax over the centroid's raw mean components, ties to the lowest
/// attribute index. Raw means are compared as published; with normalize set,
/// components are z-scored per attribute across centroids first. Requires a
/// vector model (arity >= 2). Idempotent.
inline ClusterModel label_clusters(ClusterModel model, bool normalize = false) {
    const std::size_t arity = model.schema.arity();
    if (arity < 2)
        throw std::invalid_argument(
            "pooled 1-D models carry no attribute identity; supply an attribution map");

    std::vector<std::vector<double>> scores;
    scores.reserve(model.k());
    for (const auto& centroid : model.centroids) scores.push_back(centroid.mean);

    if (normalize) {
        for (std::size_t d = 0; d < arity; ++d) {
            double sum = 0.0;
            for (const auto& s : scores) sum += s[d];
            const double mean = sum / static_cast<double>(scores.size());
            double var = 0.0;
            for (const auto& s : scores) var += (s[d] - mean) * (s[d] - mean);
            const double sd = std::sqrt(var / static_cast<double>(scores.size()));
            for (auto& s : scores) s[d] = sd > 0.0 ? (s[d] - mean) / sd : 0.0;
        }
    }

    model.labels.clear();
    model.labels.reserve(model.k());
    for (const auto& s : scores) {
        std::size_t dominant = 0;
        for (std::size_t d = 1; d < arity; ++d)
            if (s[d] > s[dominant]) dominant = d;
        model.labels.emplace_back(detail::category_for(model.schema.names()[dominant]));
    }
    return model;
}

/// Labels a pooled 1-D model from a caller-supplied cluster-to-attribute map,
/// which must cover every cluster.
inline ClusterModel label_pooled_clusters(ClusterModel model,
                                          const std::map<std::size_t, std::string>& attribution) {
    if (model.schema.arity() != 1)
        throw std::invalid_argument("attribution maps apply to pooled 1-D models only");
    model.labels.clear();
    model.labels.reserve(model.k());
    for (std::size_t j = 0; j < model.k(); ++j) {
        const auto it = attribution.find(j);
        if (it == attribution.end())
            throw std::invalid_argument("attribution map does not cover cluster " +
                                        std::to_string(j));
        model.labels.emplace_back(detail::category_for(it->second));
    }
    return model;
}

struct Forecast {
    Date date{};
    std::size_t cluster = 0;
    std::string category;

    bool operator==(const Forecast&) const = default;
};

/// One forecast per log entry, in order: the date, the receiving cluster, and
/// that cluster's category. Every referenced cluster must be labeled.
inline std::vector<Forecast> forecast(const InsertionLog& log, const ClusterModel& model) {
    std::vector<Forecast> out;
    out.reserve(log.entries.size());
    for (const auto& entry : log.entries) {
        if (entry.cluster >= model.labels.size() || !model.labels[entry.cluster])
            throw std::invalid_argument("cluster " + std::to_string(entry.cluster) +
                                        " has no weather category; label the model first");
        out.push_back(Forecast{entry.date, entry.cluster,
                               model.labels[entry.cluster]->description});
    }
    return out;
}

/// CSV form: date,cluster,category with the canonical category spelling.
inline std::string forecasts_to_csv(const std::vector<Forecast>& forecasts) {
    std::ostringstream out;
    out << "date,cluster,category\n";
    for (const auto& f : forecasts)
        out << join_csv_line({format_date(f.date), std::to_string(f.cluster), f.category})
            << '\n';
    return out.str();
}

inline std::vector<Forecast> parse_forecast_csv(std::string_view text) {
    const auto lines = detail::read_lines(text);
    std::vector<Forecast> out;
    bool saw_header = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (detail::trim(lines[i]).empty()) continue;
        const auto fields = split_csv_line(lines[i], line_no);
        if (!saw_header) {
            if (fields.size() != 3 || !detail::iequals(detail::trim(fields[0]), "date"))
                throw ParseError("expected header 'date,cluster,category'", line_no);
            saw_header = true;
            continue;
        }
        if (fields.size() != 3)
            throw ParseError("expected 3 columns, found " + std::to_string(fields.size()),
                             line_no);
        Forecast f;
        f.date = parse_date(fields[0], line_no);
        const auto cluster_field = detail::trim(fields[1]);
        if (!detail::all_digits(cluster_field))
            throw ParseError("malformed cluster index '" + std::string(cluster_field) + "'",
                             line_no);
        f.cluster = static_cast<std::size_t>(std::stoull(std::string(cluster_field)));
        f.category = fields[2];
        out.push_back(std::move(f));
    }
    if (!saw_header)
        throw ParseError("missing header row");
    return out;
}

}  // namespace driftcast
