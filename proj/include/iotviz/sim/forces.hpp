#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "iotviz/core/prng.hpp"
#include "iotviz/core/vec3.hpp"
#include "iotviz/sim/config.hpp"
#include "iotviz/sim/graph.hpp"
#include "iotviz/sim/octree.hpp"

// Force kernels. Each accumulate_* adds its contribution into `out`
// (one Vec3 per node) and reads positions only, so kernels can run against
// any position snapshot. Pair kernels visit pairs in ascending index order
// and apply +F / -F from a single evaluation.

namespace iotviz {

using ForceAccumulator = std::vector<Vec3>;

// Unit horizontal direction pointing from node a towards node b, used when
// the two coincide. Depends only on (seed, min, max) so it is reproducible
// and antisymmetric: jitter(a, b) == -jitter(b, a).
inline Vec3 jitter_direction(std::uint64_t seed, std::size_t a, std::size_t b) {
    const auto lo = std::min(a, b);
    const auto hi = std::max(a, b);
    Prng rng(seed ^ splitmix64((static_cast<std::uint64_t>(lo) << 32) ^ static_cast<std::uint64_t>(hi)));
    Vec3 d;
    double n2 = 0.0;
    do {
        d = {rng.uniform(-1.0, 1.0), 0.0, rng.uniform(-1.0, 1.0)};
        n2 = norm2(d);
    } while (n2 < 1e-4 || n2 > 1.0);
    d *= 1.0 / std::sqrt(n2);
    return a == lo ? d : -d;
}

// Unit vector from a to b given displacement d = x_b - x_a.
inline Vec3 unit_or_jitter(const Vec3& d, double dist, std::uint64_t seed, std::size_t a, std::size_t b) {
    return dist > 0.0 ? d * (1.0 / dist) : jitter_direction(seed, a, b);
}

// Linear springs: F = k (|d| - rest) d_hat on `from`, -F on `to`.
inline void accumulate_link_forces(const SimGraph& g, std::span<const Vec3> x, const Config& c,
                                   std::span<Vec3> out) {
    for (const auto& l : g.links) {
        const Vec3 d = x[l.to] - x[l.from];
        const double dist = norm(d);
        const Vec3 f = l.stiffness * (dist - l.rest_length) * unit_or_jitter(d, dist, c.seed, l.from, l.to);
        out[l.from] += f;
        out[l.to] -= f;
    }
}

// Soft anchors pull towards their reference point with anchor_stiffness.
// Hard anchors are enforced by pinning, not by force.
inline void accumulate_anchor_forces(const SimGraph& g, std::span<const Vec3> x, const Config& c,
                                     std::span<Vec3> out) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& a = g.nodes[i].anchor;
        if (a && !a->hard) out[i] += c.anchor_stiffness * (a->position - x[i]);
    }
}

// Force on i from a point charge q_j at xj. Like signs repel.
inline Vec3 coulomb(const Vec3& xi, double qi, const Vec3& xj, double qj, double softening, std::uint64_t seed,
                    std::size_t i, std::size_t j) {
    const Vec3 d = xi - xj;
    const double r2 = norm2(d);
    const double r = std::sqrt(r2);
    const Vec3 away = r > 0.0 ? d * (1.0 / r) : -jitter_direction(seed, i, j);
    return (qi * qj / std::max(r2, softening * softening)) * away;
}

// Force on a charge qi at xi from a far octree cell, expanded to
// quadrupole order about the cell's center of charge (F = -qi grad phi).
inline Vec3 multipole_force(const Vec3& xi, double qi, const ChargeOctree::Cell& cell) {
    const Vec3 r = xi - cell.center_of_charge;
    const double r2 = norm2(r);
    const double inv_r = 1.0 / std::sqrt(r2);
    const double inv_r3 = inv_r * inv_r * inv_r;
    const double inv_r5 = inv_r3 * inv_r * inv_r;
    const auto& m = cell.quadrupole;
    const Vec3 mr{m[0] * r.x + m[3] * r.y + m[4] * r.z, m[3] * r.x + m[1] * r.y + m[5] * r.z,
                  m[4] * r.x + m[5] * r.y + m[2] * r.z};
    const double rmr = dot(r, mr);
    const double dr = dot(cell.dipole, r);
    Vec3 f = (cell.charge * inv_r3 + 3.0 * dr * inv_r5 + 2.5 * rmr * inv_r5 * inv_r * inv_r) * r;
    f -= inv_r3 * cell.dipole;
    f -= inv_r5 * mr;
    return qi * f;
}

inline std::vector<std::size_t> charged_nodes(const SimGraph& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.nodes[i].charge != 0.0) out.push_back(i);
    return out;
}

// n-body charge forces through a Barnes-Hut octree. theta == 0 never
// approximates and reproduces the exact pairwise sum. Work is split across
// config.threads; each node's sum is independent of the split, so results
// are bit-identical for any thread count.
inline void accumulate_charge_forces(const SimGraph& g, std::span<const Vec3> x, const Config& c, double theta,
                                     std::span<Vec3> out) {
    const auto members = charged_nodes(g);
    if (members.size() < 2) return;
    std::vector<double> q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = g.nodes[i].charge;
    const ChargeOctree tree(x, q, members);
    std::vector<Vec3> local(members.size());

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t m = begin; m < end; ++m) {
            const auto i = members[m];
            Vec3 f;
            tree.walk(
                i, theta,
                [&](const ChargeOctree::Cell& cell) { f += multipole_force(x[i], q[i], cell); },
                [&](std::size_t j) { f += coulomb(x[i], q[i], x[j], q[j], c.charge_softening_m, c.seed, i, j); });
            local[m] = f;
        }
    };

    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(c.threads, 1)), members.size());
    if (workers <= 1) {
        work(0, members.size());
    } else {
        std::vector<std::jthread> pool;
        const auto chunk = (members.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const auto b = w * chunk;
            const auto e = std::min(members.size(), b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
    }
    for (std::size_t m = 0; m < members.size(); ++m) out[members[m]] += local[m];
}

inline void accumulate_charge_forces(const SimGraph& g, std::span<const Vec3> x, const Config& c,
                                     std::span<Vec3> out) {
    accumulate_charge_forces(g, x, c, c.theta, out);
}

// Weak linear cohesion F = k d between every pair of devices in one room.
// Structural device-room springs live in the link kernel.
inline void accumulate_grouping_forces(const SimGraph& g, std::span<const Vec3> x, const Config& c,
                                       std::span<Vec3> out) {
    if (c.same_room_attraction_k == 0.0) return;
    std::vector<std::vector<std::size_t>> members(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.nodes[i].kind != NodeKind::room) members[g.nodes[i].room_index].push_back(i);
    for (const auto& room : members) {
        for (std::size_t p = 0; p < room.size(); ++p) {
            for (std::size_t s = p + 1; s < room.size(); ++s) {
                const Vec3 f = c.same_room_attraction_k * (x[room[s]] - x[room[p]]);
                out[room[p]] += f;
                out[room[s]] -= f;
            }
        }
    }
}

// Horizontal 1/r repulsion between room nodes on the same level.
inline void accumulate_room_repulsion(const SimGraph& g, std::span<const Vec3> x, const Config& c,
                                      std::span<Vec3> out) {
    if (c.room_repulsion_k == 0.0) return;
    std::vector<std::size_t> rooms;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.nodes[i].kind == NodeKind::room) rooms.push_back(i);
    for (std::size_t p = 0; p < rooms.size(); ++p) {
        for (std::size_t s = p + 1; s < rooms.size(); ++s) {
            const auto a = rooms[p];
            const auto b = rooms[s];
            if (g.nodes[a].level_index != g.nodes[b].level_index) continue;
            const Vec3 h = horizontal(x[a] - x[b]);
            const double r = norm(h);
            const Vec3 away = r > 0.0 ? h * (1.0 / r) : -jitter_direction(c.seed, a, b);
            const Vec3 f = (c.room_repulsion_k / std::max(r, 0.5)) * away;
            out[a] += f;
            out[b] -= f;
        }
    }
}

// Optional vertical repulsion between nodes of different levels,
// k_f / max(|dy|, 0.5). Only meaningful when floors are not pinned.
inline void accumulate_floor_repulsion(const SimGraph& g, std::span<const Vec3> x, const Config& c,
                                       std::span<Vec3> out) {
    if (!c.floor_repulsion_enabled || c.floor_pinning) return;
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            const int la = g.nodes[a].level_index;
            const int lb = g.nodes[b].level_index;
            if (la == lb) continue;
            const double dy = x[a].y - x[b].y;
            const double sign = dy != 0.0 ? (dy > 0.0 ? 1.0 : -1.0) : (la > lb ? 1.0 : -1.0);
            const Vec3 f{0.0, sign * c.floor_repulsion_k / std::max(std::abs(dy), 0.5), 0.0};
            out[a] += f;
            out[b] -= f;
        }
    }
}

// Sum of every kernel in the fixed order link, anchor, charge, grouping,
// room, floor.
inline ForceAccumulator total_forces(const SimGraph& g, std::span<const Vec3> x, const Config& c) {
    ForceAccumulator f(g.size());
    accumulate_link_forces(g, x, c, f);
    accumulate_anchor_forces(g, x, c, f);
    accumulate_charge_forces(g, x, c, f);
    accumulate_grouping_forces(g, x, c, f);
    accumulate_room_repulsion(g, x, c, f);
    accumulate_floor_repulsion(g, x, c, f);
    return f;
}

}  // namespace iotviz
