#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "iotviz/core/error.hpp"
#include "iotviz/metadata/document.hpp"

namespace iotviz {

// Log-distance path-loss model parameters.
struct PathLossParams {
    double d0_m = 1.0;      // reference distance
    double p0_dbm = -40.0;  // RSSI measured at d0
    double exponent_n = 2.0;
    double d_min_m = 0.3;
    double d_max_m = 30.0;

    void validate() const {
        if (!(d0_m > 0.0) || !(exponent_n > 0.0) || !(d_min_m > 0.0) || !(d_min_m < d_max_m) ||
            !std::isfinite(p0_dbm) || !std::isfinite(d_max_m))
            throw ArgumentError("invalid path-loss parameters");
    }
};

// d = d0 * 10^((p0 - rssi) / (10 n)), clamped to [d_min, d_max].
inline double rssi_to_distance(double rssi_dbm, const PathLossParams& params = {}) {
    const double d = params.d0_m * std::pow(10.0, (params.p0_dbm - rssi_dbm) / (10.0 * params.exponent_n));
    return std::clamp(d, params.d_min_m, params.d_max_m);
}

// Adds the documented wall losses back onto the measured RSSI so the distance
// model sees an estimate of the free-space signal.
inline double corrected_rssi(const LinkRecord& link, const MaterialTable& materials) {
    double rssi = link.rssi_dbm;
    if (!link.wall_materials) return rssi;
    for (const auto& name : *link.wall_materials) {
        auto it = materials.entries.find(name);
        if (it == materials.entries.end())
            throw UnknownMaterialError("link '" + link.sensor_id + "' -> '" + link.gateway_id +
                                       "' crosses unknown material '" + name + "'");
        rssi += it->second;
    }
    return rssi;
}

inline double corrected_rssi(const LinkRecord& link, const std::optional<MaterialTable>& materials) {
    static const MaterialTable empty;
    return corrected_rssi(link, materials ? *materials : empty);
}

}  // namespace iotviz
