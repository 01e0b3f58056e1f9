#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iotviz/metadata/document.hpp"

namespace iotviz {

inline constexpr double kAdjacencyRssiFloor = -100.0;
inline constexpr double kAdjacencyRssiCeil = -30.0;

// Normalized link quality in [0, 1] over the [-100, -30] dBm window.
inline double signal_quality(double rssi_dbm) {
    return std::clamp((rssi_dbm - kAdjacencyRssiFloor) / (kAdjacencyRssiCeil - kAdjacencyRssiFloor), 0.0, 1.0);
}

// Room pairs suggested by links that cross room boundaries, plus the
// document's explicit hints. Explicit hints replace inferred ones for the
// same unordered pair. Output is sorted by (room_a, room_b) with
// room_a < room_b, so it is independent of link order.
//
// A cross-room link at or below the quality floor would give weight 0; such
// links carry no proximity evidence and are dropped.
inline std::vector<AdjacencyHint> infer_adjacency(const MetadataDocument& doc) {
    std::unordered_map<std::string, const DeviceRecord*> devices;
    for (const auto& d : doc.devices) devices.emplace(d.device_id, &d);

    std::map<std::pair<std::string, std::string>, double> merged;
    auto ordered = [](const std::string& a, const std::string& b) {
        return a < b ? std::pair{a, b} : std::pair{b, a};
    };
    for (const auto& l : doc.links) {
        const auto& room_s = devices.at(l.sensor_id)->room_id;
        const auto& room_g = devices.at(l.gateway_id)->room_id;
        if (room_s == room_g) continue;
        const double q = signal_quality(l.rssi_dbm);
        if (q <= 0.0) continue;
        auto [it, inserted] = merged.emplace(ordered(room_s, room_g), q);
        if (!inserted) it->second = std::max(it->second, q);
    }
    if (doc.adjacency_hints)
        for (const auto& h : *doc.adjacency_hints) merged[ordered(h.room_a, h.room_b)] = h.weight;

    std::vector<AdjacencyHint> out;
    out.reserve(merged.size());
    for (const auto& [pair, w] : merged) out.push_back({pair.first, pair.second, w});
    return out;
}

}  // namespace iotviz
