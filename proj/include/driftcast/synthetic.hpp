#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "driftcast/types.hpp"

namespace driftcast {

/// Inclusive value range for one attribute.
struct AttributeRange {
    double low = 0.0;
    double high = 0.0;
};

/// Deterministic uniform draws, one record per consecutive day from 1/1/2009.
/// Values are quantized to two decimals and clamped into their range, matching
/// the precision of published readings. Pure function of (seed, days, profile).
inline Dataset generate_synthetic(std::uint64_t seed, std::size_t days,
                                  const std::vector<AttributeRange>& profile,
                                  const AttributeSchema& schema = AttributeSchema()) {
    if (profile.size() != schema.arity())
        throw std::invalid_argument("profile must provide one range per attribute");
    for (const auto& r : profile)
        if (!(r.low <= r.high) || !std::isfinite(r.low) || !std::isfinite(r.high) || r.low < 0)
            throw std::invalid_argument("invalid range: low must satisfy 0 <= low <= high");

    std::mt19937_64 rng(seed);
    const auto uniform01 = [&rng] {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    };

    using namespace std::chrono;
    const sys_days start{Date{year{2009}, January, day{1}}};

    Dataset ds{schema, {}};
    ds.records.reserve(days);
    for (std::size_t d = 0; d < days; ++d) {
        PollutantRecord rec;
        rec.date = Date{start + std::chrono::days{static_cast<int>(d)}};
        rec.values.reserve(profile.size());
        for (const auto& r : profile) {
            double v = r.low + (r.high - r.low) * uniform01();
            v = std::round(v * 100.0) / 100.0;
            rec.values.push_back(std::clamp(v, r.low, r.high));
        }
        ds.records.push_back(std::move(rec));
    }
    return ds;
}

}  // namespace driftcast
