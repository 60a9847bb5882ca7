#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace driftcast {

enum class DistanceMetric { manhattan, euclidean };

inline std::string to_string(DistanceMetric metric) {
    return metric == DistanceMetric::manhattan ? "manhattan" : "euclidean";
}

inline DistanceMetric metric_from_string(std::string_view name) {
    if (name == "manhattan") return DistanceMetric::manhattan;
    if (name == "euclidean") return DistanceMetric::euclidean;
    throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

inline double manhattan_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("distance requires vectors of equal length");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
    return sum;
}

inline double squared_euclidean_distance(std::span<const double> a,
                                         std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("distance requires vectors of equal length");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

inline double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_euclidean_distance(a, b));
}

inline double distance(std::span<const double> a, std::span<const double> b,
                       DistanceMetric metric) {
    return metric == DistanceMetric::manhattan ? manhattan_distance(a, b)
                                               : euclidean_distance(a, b);
}

}  // namespace driftcast
