#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "iotviz/core/error.hpp"

namespace iotviz {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kStructuralGray{128, 128, 128};

// Linear red -> green ramp over [rssi_low, rssi_high] dBm.
struct ColorRamp {
    double rssi_low = -100.0;
    double rssi_high = -30.0;

    void validate() const {
        if (!std::isfinite(rssi_low) || !std::isfinite(rssi_high) || !(rssi_low < rssi_high))
            throw ArgumentError("color ramp needs finite rssi_low < rssi_high");
    }
};

inline Rgb color_for_rssi(double rssi_dbm, const ColorRamp& ramp = {}) {
    if (!std::isfinite(rssi_dbm)) throw ArgumentError("rssi must be finite");
    const double t = std::clamp((rssi_dbm - ramp.rssi_low) / (ramp.rssi_high - ramp.rssi_low), 0.0, 1.0);
    return {static_cast<std::uint8_t>(std::lround(255.0 * (1.0 - t))), static_cast<std::uint8_t>(std::lround(255.0 * t)),
            0};
}

}  // namespace iotviz
