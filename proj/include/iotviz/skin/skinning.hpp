#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "iotviz/core/error.hpp"
#include "iotviz/metadata/document.hpp"
#include "iotviz/sim/config.hpp"
#include "iotviz/skin/aabb.hpp"

namespace iotviz {

// Room box from the converged positions of the room's devices.
//
// Extremes first. If every device sits on one point the box is grown to a
// room_min_extent_m cube around it. Each side is then padded by
// max(room_padding_min_m, room_padding_fraction * extent) per axis. A room
// with known dimensions instead gets a box of exactly that size centered on
// the devices' centroid.
inline Aabb room_aabb(std::span<const Vec3> members, const RoomRecord& room, const Config& c = {}) {
    if (members.empty()) throw EmptyRoomError("room '" + room.room_id + "' has no devices to skin");
    if (room.known_size) {
        Vec3 centroid;
        for (const auto& p : members) centroid += p;
        centroid *= 1.0 / static_cast<double>(members.size());
        const Vec3 half{0.5 * room.known_size->width_m, 0.5 * room.known_size->height_m,
                        0.5 * room.known_size->depth_m};
        return {centroid - half, centroid + half};
    }
    Aabb box = bounds_of(members);
    if (box.extent() == Vec3{}) box = box.expanded(0.5 * c.room_min_extent_m);
    if (!c.room_padding_enabled) return box;
    const Vec3 e = box.extent();
    const Vec3 pad{std::max(c.room_padding_min_m, c.room_padding_fraction * e.x),
                   std::max(c.room_padding_min_m, c.room_padding_fraction * e.y),
                   std::max(c.room_padding_min_m, c.room_padding_fraction * e.z)};
    return box.expanded(pad);
}

// Union of all room boxes plus envelope_padding_m on every side.
inline Aabb building_aabb(std::span<const RoomBox> rooms, const Config& c = {}) {
    if (rooms.empty()) throw EmptyBuildingError("cannot build an envelope without any room boxes");
    Aabb box = rooms.front().box;
    for (const auto& r : rooms.subspan(1)) box.include(r.box);
    return box.expanded(c.envelope_padding_m);
}

// One thin slab per floor at level_index * floor_height_m spanning the
// envelope footprint.
inline std::vector<FloorSlab> floor_slabs(std::span<const FloorRecord> floors, const Aabb& envelope,
                                          const Config& c = {}) {
    std::vector<FloorSlab> out;
    out.reserve(floors.size());
    const double half = 0.5 * c.slab_thickness_m;
    for (const auto& f : floors) {
        const double y = f.level_index * c.floor_height_m;
        out.push_back({f.level_index, y, {{envelope.min.x, y - half, envelope.min.z}, {envelope.max.x, y + half, envelope.max.z}}});
    }
    return out;
}

}  // namespace iotviz
