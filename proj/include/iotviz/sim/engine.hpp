#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "iotviz/core/error.hpp"
#include "iotviz/core/prng.hpp"
#include "iotviz/core/vec3.hpp"
#include "iotviz/sim/collision.hpp"
#include "iotviz/sim/config.hpp"
#include "iotviz/sim/forces.hpp"
#include "iotviz/sim/graph.hpp"

namespace iotviz {

struct SimulationState {
    std::vector<Vec3> positions;
    std::vector<Vec3> velocities;
    std::vector<Vec3> accelerations;
    double alpha = 1.0;
    std::int64_t tick = 0;
    bool converged = false;

    friend bool operator==(const SimulationState&, const SimulationState&) = default;
};

// One Velocity Verlet update over flat arrays.
//
//   x  <- x + v dt + a dt^2 / 2
//   a' <- scale * F(x) / m
//   v  <- (v + (a + a') dt / 2) * retain
//
// `force` fills a per-particle force array for the new positions. With
// scale = 1 and retain = 1 this is the textbook symplectic integrator.
template <class ForceFn>
void velocity_verlet_step(std::span<Vec3> x, std::span<Vec3> v, std::span<Vec3> a, std::span<const double> mass,
                          double dt, double scale, double retain, ForceFn&& force) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) x[i] += dt * v[i] + (0.5 * dt * dt) * a[i];
    const auto f = force(std::span<const Vec3>(x.data(), n));
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 a_new = (scale / mass[i]) * f[i];
        v[i] = (v[i] + (0.5 * dt) * (a[i] + a_new)) * retain;
        a[i] = a_new;
    }
}

// alpha0 * (1 - alpha_decay)^tick, formed by repeated multiplication so
// the value does not depend on the platform's pow().
inline double alpha_at(const Config& c, std::int64_t tick) {
    double alpha = c.alpha0;
    for (std::int64_t t = 0; t < tick; ++t) alpha *= 1.0 - c.alpha_decay;
    return alpha;
}

// Random start: uniform in a horizontal disc of radius init_radius_m for
// every floor, y on the node's plane, hard anchors exactly in place.
// Draws two uniforms per accepted sample in node order from Prng(seed).
inline SimulationState init_positions(const SimGraph& g, const Config& c) {
    SimulationState s;
    const auto n = g.size();
    s.positions.resize(n);
    s.velocities.assign(n, Vec3{});
    s.accelerations.assign(n, Vec3{});
    s.alpha = c.alpha0;
    Prng rng(c.seed);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& node = g.nodes[i];
        double u = 0.0;
        double w = 0.0;
        do {
            u = rng.uniform(-1.0, 1.0);
            w = rng.uniform(-1.0, 1.0);
        } while (u * u + w * w > 1.0);
        s.positions[i] = {c.init_radius_m * u, node.pinned_y, c.init_radius_m * w};
        if (node.hard_anchored()) s.positions[i] = node.anchor->position;
    }
    return s;
}

// Hard constraint: every node back onto its floor plane with no vertical
// velocity; hard anchors snapped to their full position, at rest.
inline void apply_floor_pinning(const SimGraph& g, SimulationState& s) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& node = g.nodes[i];
        if (node.hard_anchored()) {
            s.positions[i] = node.anchor->position;
            s.velocities[i] = {};
            continue;
        }
        s.positions[i].y = node.pinned_y;
        s.velocities[i].y = 0.0;
    }
}

inline void check_finite(const SimulationState& s) {
    for (std::size_t i = 0; i < s.positions.size(); ++i) {
        if (!is_finite(s.positions[i]) || !is_finite(s.velocities[i]))
            throw NonFiniteStateError("node " + std::to_string(i) + " left the finite range at tick " +
                                      std::to_string(s.tick) + "; force constants are too large for dt");
    }
}

// Mass used by the integrator: the node's own mass, raised to at least the
// summed stiffness of its springs times dt^2. A hub with many springs (a
// gateway serving a whole floor) would otherwise exceed the explicit
// integrator's stability limit. Only the dynamics change; equilibria do not.
inline std::vector<double> integration_masses(const SimGraph& g, const Config& c) {
    std::vector<double> stiffness(g.size(), 0.0);
    for (const auto& l : g.links) {
        stiffness[l.from] += l.stiffness;
        stiffness[l.to] += l.stiffness;
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.nodes[i].anchor && !g.nodes[i].anchor->hard) stiffness[i] += c.anchor_stiffness;
    std::vector<double> mass(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) mass[i] = std::max(g.nodes[i].mass, stiffness[i] * c.dt * c.dt);
    return mass;
}

// One simulation tick: Verlet update with alpha-scaled forces and velocity
// decay, then floor pinning, then collision correction, then cooling.
inline void step(const SimGraph& g, SimulationState& s, const Config& c) {
    const auto mass = integration_masses(g, c);
    velocity_verlet_step(s.positions, s.velocities, s.accelerations, mass, c.dt, s.alpha, c.velocity_decay,
                         [&](std::span<const Vec3> x) { return total_forces(g, x, c); });
    if (c.floor_pinning) apply_floor_pinning(g, s);
    resolve_collisions(g, s.positions, c);
    check_finite(s);
    s.tick += 1;
    s.alpha *= 1.0 - c.alpha_decay;
    s.converged = s.alpha < c.alpha_min || s.tick >= c.max_ticks;
}

inline SimulationState step(const SimGraph& g, const SimulationState& s, const Config& c) {
    SimulationState next = s;
    step(g, next, c);
    return next;
}

struct RunResult {
    SimulationState state;
    std::int64_t ticks = 0;
};

inline RunResult run_to_convergence(const SimGraph& g, const Config& c) {
    c.validate();
    RunResult r{init_positions(g, c), 0};
    r.state.converged = c.max_ticks == 0;
    while (!r.state.converged) step(g, r.state, c);
    r.ticks = r.state.tick;
    return r;
}

}  // namespace iotviz
