#pragma once

#include <algorithm>
#include <span>
#include <string>

#include "iotviz/core/vec3.hpp"

namespace iotviz {

struct Aabb {
    Vec3 min;
    Vec3 max;

    friend bool operator==(const Aabb&, const Aabb&) = default;

    static Aabb around(const Vec3& p) { return {p, p}; }

    bool valid() const { return min.x <= max.x && min.y <= max.y && min.z <= max.z; }
    Vec3 extent() const { return max - min; }
    Vec3 center() const { return 0.5 * (min + max); }
    double volume() const {
        const auto e = extent();
        return e.x * e.y * e.z;
    }

    void include(const Vec3& p) {
        min = {std::min(min.x, p.x), std::min(min.y, p.y), std::min(min.z, p.z)};
        max = {std::max(max.x, p.x), std::max(max.y, p.y), std::max(max.z, p.z)};
    }
    void include(const Aabb& b) {
        include(b.min);
        include(b.max);
    }

    Aabb expanded(const Vec3& pad) const { return {min - pad, max + pad}; }
    Aabb expanded(double pad) const { return expanded(Vec3{pad, pad, pad}); }

    bool contains(const Vec3& p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y && p.z >= min.z && p.z <= max.z;
    }
    bool contains(const Aabb& b) const { return contains(b.min) && contains(b.max); }
};

inline double intersection_volume(const Aabb& a, const Aabb& b) {
    const double dx = std::min(a.max.x, b.max.x) - std::max(a.min.x, b.min.x);
    const double dy = std::min(a.max.y, b.max.y) - std::max(a.min.y, b.min.y);
    const double dz = std::min(a.max.z, b.max.z) - std::max(a.min.z, b.min.z);
    if (dx <= 0.0 || dy <= 0.0 || dz <= 0.0) return 0.0;
    return dx * dy * dz;
}

// Component-wise extremes of a non-empty point set.
inline Aabb bounds_of(std::span<const Vec3> points) {
    Aabb box = Aabb::around(points.front());
    for (const auto& p : points.subspan(1)) box.include(p);
    return box;
}

struct RoomBox {
    std::string room_id;
    Aabb box;
    std::string label;
    int level_index = 0;
    friend bool operator==(const RoomBox&, const RoomBox&) = default;
};

struct FloorSlab {
    int level_index = 0;
    double plane_y = 0.0;
    Aabb extent;
    friend bool operator==(const FloorSlab&, const FloorSlab&) = default;
};

}  // namespace iotviz
