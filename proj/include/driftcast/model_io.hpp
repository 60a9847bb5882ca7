#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "driftcast/clustering.hpp"
#include "driftcast/metric.hpp"
#include "driftcast/types.hpp"

namespace driftcast {

inline constexpr int kModelFormatVersion = 1;

/// Serializes a model as a JSON document with sorted keys, so identical models
/// produce identical bytes and save(load(save(m))) round-trips exactly.
inline std::string save_model(const ClusterModel& model) {
    nlohmann::json doc;
    doc["format_version"] = kModelFormatVersion;
    doc["schema"] = model.schema.names();
    doc["metric"] = to_string(model.metric);

    nlohmann::json centroids = nlohmann::json::array();
    for (const auto& c : model.centroids)
        centroids.push_back({{"mean", c.mean}, {"member_count", c.member_count}});
    doc["centroids"] = std::move(centroids);

    if (model.labels.empty()) {
        doc["labels"] = nullptr;
    } else {
        nlohmann::json labels = nlohmann::json::array();
        for (const auto& label : model.labels) {
            if (label)
                labels.push_back(
                    {{"dominant", label->dominant}, {"description", label->description}});
            else
                labels.push_back(nullptr);
        }
        doc["labels"] = std::move(labels);
    }
    return doc.dump(2) + "\n";
}

inline ClusterModel load_model(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid model JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("model file must contain a JSON object");
    if (!doc.contains("format_version") || !doc["format_version"].is_number_integer())
        throw ParseError("model file is missing an integer format_version");
    if (doc["format_version"].get<int>() != kModelFormatVersion)
        throw ParseError("unsupported model format_version " +
                         doc["format_version"].dump());

    ClusterModel model;
    try {
        model.schema = AttributeSchema(doc.at("schema").get<std::vector<std::string>>());
        model.metric = metric_from_string(doc.at("metric").get<std::string>());
        for (const auto& entry : doc.at("centroids")) {
            Centroid c;
            c.mean = entry.at("mean").get<std::vector<double>>();
            c.member_count = entry.at("member_count").get<std::size_t>();
            model.centroids.push_back(std::move(c));
        }
        const auto& labels = doc.at("labels");
        if (!labels.is_null()) {
            for (const auto& entry : labels) {
                if (entry.is_null())
                    model.labels.emplace_back(std::nullopt);
                else
                    model.labels.emplace_back(
                        WeatherCategory{entry.at("dominant").get<std::string>(),
                                        entry.at("description").get<std::string>()});
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed model file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("malformed model file: ") + e.what());
    }

    if (model.centroids.empty())
        throw ParseError("model must contain at least one centroid");
    for (const auto& c : model.centroids) {
        if (c.mean.size() != model.schema.arity())
            throw ParseError("centroid arity does not match the schema");
        for (const double v : c.mean)
            if (!std::isfinite(v)) throw ParseError("centroid mean must be finite");
    }
    if (!model.labels.empty() && model.labels.size() != model.centroids.size())
        throw ParseError("labels must cover every cluster or be null");
    return model;
}

inline void save_model_file(const ClusterModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write model file '" + path + "'");
    out << save_model(model);
}

inline ClusterModel load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read model file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_model(buffer.str());
}

}  // namespace driftcast
