#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iotviz/core/vec3.hpp"
#include "iotviz/sim/config.hpp"
#include "iotviz/sim/forces.hpp"
#include "iotviz/sim/graph.hpp"

namespace iotviz {

namespace detail {

struct CellKey {
    std::int64_t x, y, z;
    friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        auto h = splitmix64(static_cast<std::uint64_t>(k.x));
        h = splitmix64(h ^ static_cast<std::uint64_t>(k.y));
        return static_cast<std::size_t>(splitmix64(h ^ static_cast<std::uint64_t>(k.z)));
    }
};

}  // namespace detail

// Broad phase: uniform hash grid with cell size 2 * max radius. Returns the
// candidate pairs (i < j) whose spheres overlap, sorted, so the narrow
// phase order never depends on hash-table iteration order.
inline std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs(const SimGraph& g,
                                                                          std::span<const Vec3> x) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    double max_r = 0.0;
    for (const auto& n : g.nodes) max_r = std::max(max_r, n.radius);
    if (max_r <= 0.0) return pairs;
    const double cell = 2.0 * max_r;
    auto key_of = [cell](const Vec3& p) {
        return detail::CellKey{static_cast<std::int64_t>(std::floor(p.x / cell)),
                               static_cast<std::int64_t>(std::floor(p.y / cell)),
                               static_cast<std::int64_t>(std::floor(p.z / cell))};
    };
    std::unordered_map<detail::CellKey, std::vector<std::size_t>, detail::CellKeyHash> grid;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.nodes[i].radius > 0.0) grid[key_of(x[i])].push_back(i);

    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.nodes[i].radius <= 0.0) continue;
        const auto k = key_of(x[i]);
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy)
                for (std::int64_t dz = -1; dz <= 1; ++dz) {
                    auto it = grid.find({k.x + dx, k.y + dy, k.z + dz});
                    if (it == grid.end()) continue;
                    for (const auto j : it->second) {
                        if (j <= i) continue;
                        const double reach = g.nodes[i].radius + g.nodes[j].radius;
                        if (norm2(x[j] - x[i]) < reach * reach) pairs.emplace_back(i, j);
                    }
                }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

// Positional overlap correction. Overlapping pairs are separated along
// their horizontal direction until the centers are r_i + r_j apart, split
// inversely to mass. Vertical coordinates are never touched. Hard-anchored
// nodes do not move; radius-0 nodes never collide.
inline void resolve_collisions(const SimGraph& g, std::span<Vec3> x, const Config& c) {
    for (int pass = 0; pass < c.collision_iterations; ++pass) {
        const auto pairs = overlapping_pairs(g, x);
        if (pairs.empty()) return;
        for (const auto& [i, j] : pairs) {
            const double reach = g.nodes[i].radius + g.nodes[j].radius;
            const Vec3 d = x[j] - x[i];
            const double dy = d.y;
            if (std::abs(dy) >= reach) continue;
            const Vec3 h = horizontal(d);
            const double have = norm(h);
            const double need = std::sqrt(reach * reach - dy * dy);
            if (have >= need) continue;
            const Vec3 dir = have > 0.0 ? h * (1.0 / have) : jitter_direction(c.seed, i, j);
            const double push = need - have;
            const bool fixed_i = g.nodes[i].hard_anchored();
            const bool fixed_j = g.nodes[j].hard_anchored();
            if (fixed_i && fixed_j) continue;
            const double mi = g.nodes[i].mass;
            const double mj = g.nodes[j].mass;
            const double share_i = fixed_i ? 0.0 : fixed_j ? 1.0 : mj / (mi + mj);
            x[i] -= (push * share_i) * dir;
            x[j] += (push * (1.0 - share_i)) * dir;
        }
    }
}

}  // namespace iotviz
