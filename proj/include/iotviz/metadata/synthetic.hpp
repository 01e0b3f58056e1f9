#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "iotviz/core/error.hpp"
#include "iotviz/core/prng.hpp"
#include "iotviz/metadata/document.hpp"

namespace iotviz {

inline constexpr double kSyntheticRssiLow = -90.0;
inline constexpr double kSyntheticRssiHigh = -40.0;

namespace detail {
inline std::string numbered(char prefix, std::int64_t i, int width) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%c%0*lld", prefix, width, static_cast<long long>(i));
    return buf;
}
}  // namespace detail

// Deterministic synthetic building.
//
//  * room i sits on floor (i mod floors); floor f has level_index f
//  * sensor j sits in room (j mod rooms)
//  * gateway g sits on floor (g mod floors), in that floor's
//    (g div floors)-th room (wrapping); if the floor has no rooms it falls
//    back to room (g mod rooms)
//  * each sensor links to the gateway on its own floor whose room index is
//    nearest its own room index (ties to the lower gateway index); sensors
//    on gateway-less floors stay unlinked
//  * RSSI is uniform in [-90, -40) dBm from Prng(seed), one draw per linked
//    sensor in sensor order, rounded to 0.1 dB
//
// Zero rooms yields an empty document regardless of `floors`.
inline MetadataDocument generate_synthetic(std::int64_t rooms, std::int64_t sensors, std::int64_t gateways,
                                           std::int64_t floors, std::uint64_t seed) {
    if (rooms < 0 || sensors < 0 || gateways < 0 || floors < 0)
        throw ArgumentError("synthetic counts must be non-negative");
    if (rooms > 0 && floors < 1) throw ArgumentError("at least one floor is required when rooms > 0");
    if (rooms == 0 && (sensors > 0 || gateways > 0))
        throw ArgumentError("devices need at least one room to live in");

    MetadataDocument doc;
    doc.building_id = "synthetic-" + std::to_string(rooms) + "r" + std::to_string(sensors) + "s" +
                      std::to_string(gateways) + "g" + std::to_string(floors) + "f-" + std::to_string(seed);
    if (rooms == 0) return doc;

    for (std::int64_t f = 0; f < floors; ++f)
        doc.floors.push_back({detail::numbered('F', f, 2), static_cast<int>(f)});

    std::vector<std::vector<std::int64_t>> rooms_on_floor(static_cast<std::size_t>(floors));
    for (std::int64_t i = 0; i < rooms; ++i) {
        const auto f = i % floors;
        rooms_on_floor[static_cast<std::size_t>(f)].push_back(i);
        doc.rooms.push_back({detail::numbered('R', i, 3), doc.floors[static_cast<std::size_t>(f)].floor_id,
                             "Room " + std::to_string(i), std::nullopt});
    }

    struct Gateway {
        std::int64_t index;
        std::int64_t room;
    };
    std::vector<std::vector<Gateway>> gateways_on_floor(static_cast<std::size_t>(floors));
    std::vector<std::int64_t> gateway_room(static_cast<std::size_t>(gateways));
    for (std::int64_t g = 0; g < gateways; ++g) {
        const auto f = static_cast<std::size_t>(g % floors);
        const auto& candidates = rooms_on_floor[f];
        const std::int64_t room =
            candidates.empty() ? g % rooms
                               : candidates[static_cast<std::size_t>((g / floors) %
                                                                     static_cast<std::int64_t>(candidates.size()))];
        gateway_room[static_cast<std::size_t>(g)] = room;
        gateways_on_floor[static_cast<std::size_t>(room % floors)].push_back({g, room});
    }

    for (std::int64_t j = 0; j < sensors; ++j)
        doc.devices.push_back({detail::numbered('S', j, 4), DeviceKind::sensor, detail::numbered('R', j % rooms, 3)});
    for (std::int64_t g = 0; g < gateways; ++g)
        doc.devices.push_back({detail::numbered('G', g, 3), DeviceKind::gateway,
                               detail::numbered('R', gateway_room[static_cast<std::size_t>(g)], 3)});

    Prng rng(seed);
    for (std::int64_t j = 0; j < sensors; ++j) {
        const auto room = j % rooms;
        const auto& candidates = gateways_on_floor[static_cast<std::size_t>(room % floors)];
        if (candidates.empty()) continue;
        const Gateway* best = &candidates.front();
        for (const auto& c : candidates)
            if (std::llabs(c.room - room) < std::llabs(best->room - room)) best = &c;
        const double rssi = std::round(rng.uniform(kSyntheticRssiLow, kSyntheticRssiHigh) * 10.0) / 10.0;
        doc.links.push_back({detail::numbered('S', j, 4), detail::numbered('G', best->index, 3), rssi, std::nullopt});
    }
    return doc;
}

}  // namespace iotviz
