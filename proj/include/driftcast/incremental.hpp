#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "driftcast/clustering.hpp"
#include "driftcast/format.hpp"
#include "driftcast/metric.hpp"
#include "driftcast/types.hpp"

namespace driftcast {

/// static_centroids never mutates the model; running_mean folds each inserted
/// record into the receiving centroid's mean and count.
enum class InsertionMode { static_centroids, running_mean };

inline std::string to_string(InsertionMode mode) {
    return mode == InsertionMode::static_centroids ? "static" : "running-mean";
}

struct InsertionLogEntry {
    Date date{};
    std::vector<double> values;
    std::size_t cluster = 0;
    std::vector<double> distances;  // to every centroid, cluster order
    std::string category;           // empty when the model is unlabeled

    bool operator==(const InsertionLogEntry&) const = default;
};

struct InsertionLog {
    std::vector<InsertionLogEntry> entries;
};

struct InsertResult {
    ClusterModel model;
    InsertionLogEntry entry;
};

/// Assigns one record to its nearest centroid without refitting. The log entry
/// records the distances to all K centroids; the chosen index is their argmin
/// with ties to the lowest index. running_mean replaces the receiving mean with
/// (old_mean * n + x) / (n + 1) and increments the count.
inline InsertResult incremental_insert(const PollutantRecord& record, ClusterModel model,
                                       InsertionMode mode) {
    if (record.values.size() != model.schema.arity())
        throw std::invalid_argument("record arity does not match the model schema");
    const auto x = detail::complete_values(record);

    InsertionLogEntry entry;
    entry.date = record.date;
    entry.values = x;
    entry.distances.reserve(model.k());
    for (const auto& centroid : model.centroids)
        entry.distances.push_back(distance(x, centroid.mean, model.metric));

    std::size_t best = 0;
    for (std::size_t j = 1; j < entry.distances.size(); ++j)
        if (entry.distances[j] < entry.distances[best]) best = j;
    entry.cluster = best;
    if (best < model.labels.size() && model.labels[best])
        entry.category = model.labels[best]->description;

    if (mode == InsertionMode::running_mean) {
        Centroid& c = model.centroids[best];
        const auto n = static_cast<double>(c.member_count);
        for (std::size_t d = 0; d < c.mean.size(); ++d)
            c.mean[d] = (c.mean[d] * n + x[d]) / (n + 1.0);
        ++c.member_count;
    }
    return {std::move(model), std::move(entry)};
}

/// Folds incremental_insert over the records in order. Under static mode the
/// final model is the input model.
inline std::pair<ClusterModel, InsertionLog> insert_stream(const Dataset& new_records,
                                                           ClusterModel model,
                                                           InsertionMode mode) {
    InsertionLog log;
    log.entries.reserve(new_records.records.size());
    for (const auto& rec : new_records.records) {
        auto result = incremental_insert(rec, std::move(model), mode);
        model = std::move(result.model);
        log.entries.push_back(std::move(result.entry));
    }
    return {std::move(model), std::move(log)};
}

/// CSV form: date,cluster,category,d0,...,d{K-1}; distances at four decimals.
inline std::string insertion_log_to_csv(const InsertionLog& log, std::size_t k) {
    std::ostringstream out;
    out << "date,cluster,category";
    for (std::size_t j = 0; j < k; ++j) out << ",d" << j;
    out << '\n';
    for (const auto& entry : log.entries) {
        std::vector<std::string> fields{format_date(entry.date),
                                        std::to_string(entry.cluster), entry.category};
        for (const double d : entry.distances) fields.push_back(format_fixed(d, 4));
        out << join_csv_line(fields) << '\n';
    }
    return out.str();
}

/// How far the incremental shortcut drifted from a full refit on the combined
/// data: the fraction of records the two models assign differently, plus the
/// per-cluster L2 displacement between paired centroids.
struct DivergenceReport {
    std::size_t total = 0;
    std::size_t differing = 0;
    double divergence_fraction = 0.0;
    std::vector<double> centroid_displacement;
};

inline DivergenceReport compare_with_refit(const Dataset& base, const Dataset& new_records,
                                           std::size_t k, DistanceMetric metric,
                                           const InitStrategy& init, InsertionMode mode,
                                           std::size_t max_iter = 100) {
    if (base.schema != new_records.schema && !new_records.records.empty())
        throw std::invalid_argument("base and new datasets must share a schema");

    const FitResult base_fit = lloyd_fit(base, k, metric, init, max_iter);
    auto [incremental_model, log] = insert_stream(new_records, base_fit.model, mode);

    Dataset combined = base;
    combined.records.insert(combined.records.end(), new_records.records.begin(),
                            new_records.records.end());
    const FitResult refit = lloyd_fit(combined, k, metric, init, max_iter);

    DivergenceReport report;
    report.total = combined.records.size();
    for (const auto& rec : combined.records) {
        const auto x = detail::complete_values(rec);
        const auto incremental = assign_point(x, incremental_model).first;
        const auto refitted = assign_point(x, refit.model).first;
        if (incremental != refitted) ++report.differing;
    }
    report.divergence_fraction =
        report.total == 0 ? 0.0
                          : static_cast<double>(report.differing) /
                                static_cast<double>(report.total);
    report.centroid_displacement.reserve(k);
    for (std::size_t j = 0; j < k; ++j)
        report.centroid_displacement.push_back(euclidean_distance(
            incremental_model.centroids[j].mean, refit.model.centroids[j].mean));
    return report;
}

}  // namespace driftcast
