#pragma once

#include <string>
#include <vector>

#include "driftcast/types.hpp"

namespace driftcast {

enum class MissingPolicy { drop_record, column_mean };

/// Produces a dataset with no missing readings. drop_record removes incomplete
/// records; column_mean substitutes each gap with the mean of that column's
/// present values (error when a column is entirely missing).
inline Dataset resolve_missing(const Dataset& ds, MissingPolicy policy) {
    Dataset out{ds.schema, {}};
    if (policy == MissingPolicy::drop_record) {
        for (const auto& rec : ds.records)
            if (rec.complete()) out.records.push_back(rec);
        return out;
    }

    const std::size_t arity = ds.schema.arity();
    std::vector<double> sums(arity, 0.0);
    std::vector<std::size_t> counts(arity, 0);
    for (const auto& rec : ds.records) {
        for (std::size_t i = 0; i < arity; ++i) {
            if (rec.values[i]) {
                sums[i] += *rec.values[i];
                ++counts[i];
            }
        }
    }
    std::vector<double> means(arity, 0.0);
    for (std::size_t i = 0; i < arity; ++i) {
        if (counts[i] == 0 && !ds.records.empty())
            throw std::invalid_argument("column '" + ds.schema.names()[i] +
                                        "' has no present values to average");
        if (counts[i] > 0) means[i] = sums[i] / static_cast<double>(counts[i]);
    }

    out.records = ds.records;
    for (auto& rec : out.records)
        for (std::size_t i = 0; i < arity; ++i)
            if (!rec.values[i]) rec.values[i] = means[i];
    return out;
}

/// Flattens every present reading into its own one-attribute record, keeping
/// the source record's date. Missing readings are skipped, so the output is
/// always complete.
inline Dataset pool_scalars(const Dataset& ds) {
    Dataset out{AttributeSchema({"value"}), {}};
    for (const auto& rec : ds.records)
        for (const auto& v : rec.values)
            if (v) out.records.push_back(PollutantRecord{rec.date, {v}});
    return out;
}

}  // namespace driftcast
