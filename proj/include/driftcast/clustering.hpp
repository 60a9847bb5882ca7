#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "driftcast/metric.hpp"
#include "driftcast/types.hpp"

namespace driftcast {

struct Centroid {
    std::vector<double> mean;
    std::size_t member_count = 0;

    bool operator==(const Centroid&) const = default;
};

/// A fitted model: K centroids under one metric, with optional per-cluster
/// weather categories. Cluster id is the centroid's index.
struct ClusterModel {
    AttributeSchema schema;
    DistanceMetric metric = DistanceMetric::euclidean;
    std::vector<Centroid> centroids;
    std::vector<std::optional<WeatherCategory>> labels;  // empty == unlabeled

    std::size_t k() const noexcept { return centroids.size(); }

    bool operator==(const ClusterModel&) const = default;
};

/// Per-record cluster indices plus the within-cluster sum of squared Euclidean
/// distances. The wcss diagnostic uses squared Euclidean distances regardless
/// of the assignment metric, so runs under different metrics stay comparable.
struct Assignment {
    std::vector<std::size_t> cluster_of;
    double wcss = 0.0;
};

struct InitStrategy {
    enum class Kind { explicit_means, first_k, random } kind = Kind::first_k;
    std::vector<std::vector<double>> means;  // explicit_means only
    std::uint64_t seed = 0;                  // random only

    static InitStrategy with_means(std::vector<std::vector<double>> means) {
        return {Kind::explicit_means, std::move(means), 0};
    }
    static InitStrategy first_k() { return {Kind::first_k, {}, 0}; }
    static InitStrategy random(std::uint64_t seed) { return {Kind::random, {}, seed}; }
};

namespace detail {

inline std::vector<double> complete_values(const PollutantRecord& rec) {
    std::vector<double> v;
    v.reserve(rec.values.size());
    for (const auto& c : rec.values) {
        if (!c)
            throw std::invalid_argument("record has missing components; resolve them first");
        v.push_back(*c);
    }
    return v;
}

inline std::vector<std::vector<double>> complete_matrix(const Dataset& ds) {
    std::vector<std::vector<double>> rows;
    rows.reserve(ds.records.size());
    for (const auto& rec : ds.records) {
        if (rec.values.size() != ds.schema.arity())
            throw std::invalid_argument("record arity does not match schema");
        rows.push_back(complete_values(rec));
    }
    return rows;
}

inline std::vector<std::vector<double>> distinct_rows(
    const std::vector<std::vector<double>>& rows) {
    std::vector<std::vector<double>> distinct;
    for (const auto& row : rows)
        if (std::find(distinct.begin(), distinct.end(), row) == distinct.end())
            distinct.push_back(row);
    return distinct;
}

}  // namespace detail

/// Nearest centroid by the model's metric; ties break to the lowest cluster
/// index. Returns (cluster index, distance).
inline std::pair<std::size_t, double> assign_point(std::span<const double> x,
                                                   const ClusterModel& model) {
    if (model.centroids.empty())
        throw std::invalid_argument("model has no centroids");
    std::size_t best = 0;
    double best_dist = distance(x, model.centroids[0].mean, model.metric);
    for (std::size_t j = 1; j < model.centroids.size(); ++j) {
        const double d = distance(x, model.centroids[j].mean, model.metric);
        if (d < best_dist) {
            best = j;
            best_dist = d;
        }
    }
    return {best, best_dist};
}

/// Component-wise arithmetic means of each cluster's members. A cluster with no
/// members keeps its previous mean and reports member_count 0.
inline std::vector<Centroid> update_centroids(const Dataset& ds,
                                              const std::vector<std::size_t>& cluster_of,
                                              const std::vector<Centroid>& previous) {
    if (previous.empty())
        throw std::invalid_argument("update requires at least one centroid");
    if (cluster_of.size() != ds.records.size())
        throw std::invalid_argument("assignment does not cover all records");

    const std::size_t k = previous.size();
    const std::size_t arity = ds.schema.arity();
    std::vector<std::vector<double>> sums(k, std::vector<double>(arity, 0.0));
    std::vector<std::size_t> counts(k, 0);

    for (std::size_t i = 0; i < ds.records.size(); ++i) {
        const std::size_t c = cluster_of[i];
        if (c >= k)
            throw std::invalid_argument("assignment index out of range");
        const auto values = detail::complete_values(ds.records[i]);
        for (std::size_t d = 0; d < arity; ++d) sums[c][d] += values[d];
        ++counts[c];
    }

    std::vector<Centroid> out(k);
    for (std::size_t c = 0; c < k; ++c) {
        out[c].member_count = counts[c];
        if (counts[c] == 0) {
            out[c].mean = previous[c].mean;
        } else {
            out[c].mean.resize(arity);
            for (std::size_t d = 0; d < arity; ++d)
                out[c].mean[d] = sums[c][d] / static_cast<double>(counts[c]);
        }
    }
    return out;
}

inline std::vector<Centroid> init_centroids(const Dataset& ds, std::size_t k,
                                            const InitStrategy& init) {
    if (k < 1)
        throw std::invalid_argument("K must be at least 1");

    std::vector<Centroid> centroids;
    if (init.kind == InitStrategy::Kind::explicit_means) {
        if (init.means.size() != k)
            throw std::invalid_argument("explicit initialization must provide exactly K means");
        for (const auto& mean : init.means) {
            if (mean.size() != ds.schema.arity())
                throw std::invalid_argument("explicit mean arity does not match schema");
            centroids.push_back(Centroid{mean, 0});
        }
        return centroids;
    }

    const auto rows = detail::complete_matrix(ds);
    const auto distinct = detail::distinct_rows(rows);
    if (distinct.size() < k)
        throw std::invalid_argument("K exceeds the number of distinct records");

    if (init.kind == InitStrategy::Kind::first_k) {
        for (std::size_t i = 0; i < k; ++i) centroids.push_back(Centroid{rows[i], 0});
        return centroids;
    }

    // random: sample K distinct record values without replacement.
    std::vector<std::size_t> order(distinct.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(init.seed);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (order.size() - i));
        std::swap(order[i], order[j]);
        centroids.push_back(Centroid{distinct[order[i]], 0});
    }
    return centroids;
}

inline double compute_wcss(const std::vector<std::vector<double>>& rows,
                           const std::vector<std::size_t>& cluster_of,
                           const std::vector<Centroid>& centroids) {
    double total = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        total += squared_euclidean_distance(rows[i], centroids[cluster_of[i]].mean);
    return total;
}

struct FitResult {
    ClusterModel model;
    Assignment assignment;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> wcss_history;  // one entry per pass, after its update
};

using IterationObserver = std::function<void(std::size_t iteration, double wcss)>;

/// Lloyd iteration: alternate nearest-centroid assignment over all records and
/// mean recomputation until the assignment repeats or max_iter passes ran.
/// iterations counts assignment passes, so the stationary pass is included.
/// Deterministic for fixed inputs.
inline FitResult lloyd_fit(const Dataset& ds, std::size_t k, DistanceMetric metric,
                           const InitStrategy& init, std::size_t max_iter = 100,
                           const IterationObserver& observer = {}) {
    if (ds.records.empty())
        throw std::invalid_argument("cannot fit an empty dataset");
    if (k < 1)
        throw std::invalid_argument("K must be at least 1");
    if (max_iter < 1)
        throw std::invalid_argument("max_iter must be at least 1");

    const auto rows = detail::complete_matrix(ds);

    FitResult result;
    result.model.schema = ds.schema;
    result.model.metric = metric;
    result.model.centroids = init_centroids(ds, k, init);

    std::vector<std::size_t> previous;
    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        std::vector<std::size_t> current(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            current[i] = assign_point(rows[i], result.model).first;

        const bool stable = iter > 1 && current == previous;
        if (!stable)
            result.model.centroids = update_centroids(ds, current, result.model.centroids);

        const double wcss = compute_wcss(rows, current, result.model.centroids);
        result.wcss_history.push_back(wcss);
        if (observer) observer(iter, wcss);

        result.iterations = iter;
        previous = std::move(current);
        if (stable) {
            result.converged = true;
            break;
        }
    }

    result.assignment.cluster_of = std::move(previous);
    result.assignment.wcss = result.wcss_history.back();
    return result;
}

}  // namespace driftcast
