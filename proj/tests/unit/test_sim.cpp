#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "iotviz/metadata/synthetic.hpp"
#include "iotviz/sim/engine.hpp"
#include "support/oracles.hpp"

using namespace iotviz;

namespace {

SimNode node(const std::string& id, NodeKind kind, std::size_t room, int level = 0, double charge = 0.0,
             double radius = 0.0, double mass = 1.0) {
    SimNode n;
    n.node_id = id;
    n.kind = kind;
    n.room_id = "r" + std::to_string(room);
    n.room_index = room;
    n.level_index = level;
    n.charge = charge;
    n.radius = radius;
    n.mass = mass;
    n.pinned_y = level * 4.0;
    return n;
}

// n free sensors, each its own "room" so no grouping force applies.
SimGraph loose(std::size_t n, double charge = 0.0, double radius = 0.0) {
    SimGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_node(node("n" + std::to_string(i), NodeKind::sensor, i, 0, charge, radius));
    return g;
}

std::vector<Vec3> zeros(std::size_t n) { return std::vector<Vec3>(n); }

double rel(const Vec3& a, const oracle::P3& b) {
    const double bn = oracle::length(b);
    return oracle::length({a.x - b[0], a.y - b[1], a.z - b[2]}) / bn;
}

}  // namespace

// ---- graph -----------------------------------------------------------------

TEST(BuildGraph, ReferenceScenarioCounts) {
    const auto d = generate_synthetic(10, 50, 3, 3, 1);
    const auto g = build_sim_graph(d);
    EXPECT_EQ(g.size(), 63u);
    EXPECT_EQ(g.links.size(), d.links.size() + d.devices.size());
    for (const auto& n : g.nodes) {
        if (n.kind == NodeKind::room) {
            EXPECT_EQ(n.mass, 4.0);
            EXPECT_EQ(n.charge, 0.0);
            EXPECT_EQ(n.radius, 0.0);
        } else {
            EXPECT_EQ(n.mass, 1.0);
            EXPECT_EQ(n.charge, -30.0);
        }
        EXPECT_EQ(n.pinned_y, n.level_index * 4.0);
    }
}

TEST(BuildGraph, UnitenAndEmpty) {
    EXPECT_EQ(build_sim_graph(generate_synthetic(57, 212, 21, 5, 7)).size(), 290u);
    const auto g = build_sim_graph(generate_synthetic(0, 0, 0, 1, 7));
    EXPECT_EQ(g.size(), 0u);
    EXPECT_TRUE(g.links.empty());
}

TEST(BuildGraph, SignalRestFromCorrectedRssi) {
    MetadataDocument d;
    d.floors = {{"F", 0}};
    d.rooms = {{"A", "F", "A", std::nullopt}};
    d.devices = {{"S", DeviceKind::sensor, "A"}, {"G", DeviceKind::gateway, "A"}};
    d.materials = MaterialTable{{{"wall", 20.0}}};
    d.links = {{"S", "G", -80, std::vector<std::string>{"wall"}}};
    const auto g = build_sim_graph(d);
    ASSERT_EQ(g.links.size(), 3u);
    EXPECT_EQ(g.links[0].kind, LinkKind::signal);
    EXPECT_NEAR(g.links[0].rest_length, 10.0, 1e-12);  // -80 + 20 = -60 dBm
    EXPECT_EQ(*g.links[0].rssi_dbm, -80.0);
    EXPECT_EQ(g.links[1].kind, LinkKind::sensor_room);
    EXPECT_EQ(g.links[2].kind, LinkKind::gateway_room);
}

TEST(BuildGraph, AdjacencyLinks) {
    const auto d = generate_synthetic(10, 50, 3, 3, 1);
    const auto g = build_layout_graph(d);
    const auto hints = infer_adjacency(d);
    EXPECT_EQ(g.links.size(), d.links.size() + d.devices.size() + hints.size());
    for (std::size_t k = 0; k < hints.size(); ++k) {
        const auto& l = g.links[d.links.size() + d.devices.size() + k];
        EXPECT_EQ(l.kind, LinkKind::adjacency);
        EXPECT_DOUBLE_EQ(l.stiffness, 0.2 * hints[k].weight);
    }
}

// ---- init ------------------------------------------------------------------

TEST(InitPositions, EmptyGraph) {
    const auto s = init_positions(SimGraph{}, Config{});
    EXPECT_TRUE(s.positions.empty());
    EXPECT_EQ(s.alpha, 1.0);
}

TEST(InitPositions, PlaneAndDeterminism) {
    SimGraph g;
    g.add_node(node("a", NodeKind::sensor, 0, 2));
    g.add_node(node("b", NodeKind::sensor, 1, 0));
    Config c;
    const auto s1 = init_positions(g, c);
    EXPECT_EQ(s1.positions[0].y, 8.0);
    EXPECT_EQ(s1.positions[1].y, 0.0);
    EXPECT_EQ(s1.positions, init_positions(g, c).positions);
    for (const auto& p : s1.positions) EXPECT_LE(std::hypot(p.x, p.z), c.init_radius_m);
    c.seed = 43;
    EXPECT_NE(s1.positions, init_positions(g, c).positions);
}

TEST(InitPositions, HardAnchorPlacedExactly) {
    auto g = loose(2);
    g.nodes[1].anchor = Anchor{{3, 1, -2}, true};
    EXPECT_EQ(init_positions(g, Config{}).positions[1], (Vec3{3, 1, -2}));
}

// ---- kernels ---------------------------------------------------------------

TEST(LinkForces, Examples) {
    auto g = loose(2);
    g.add_link({"l", 0, 1, 1.0, 1.0, LinkKind::signal, std::nullopt});
    std::vector<Vec3> x{{0, 0, 0}, {2, 0, 0}};
    auto f = zeros(2);
    accumulate_link_forces(g, x, Config{}, f);
    EXPECT_EQ(f[0], (Vec3{1, 0, 0}));
    EXPECT_EQ(f[1], (Vec3{-1, 0, 0}));

    x[1] = {1, 0, 0};
    f = zeros(2);
    accumulate_link_forces(g, x, Config{}, f);
    EXPECT_EQ(f[0], (Vec3{}));

    g.links[0].stiffness = 2.0;
    x[1] = {0, 0, 0.5};
    f = zeros(2);
    accumulate_link_forces(g, x, Config{}, f);
    EXPECT_EQ(f[0], (Vec3{0, 0, -1}));
    EXPECT_EQ(f[1], (Vec3{0, 0, 1}));
    EXPECT_EQ(f[0] + f[1], Vec3{});
}

TEST(LinkForces, CoincidentEndpointsUseJitter) {
    auto g = loose(2);
    g.add_link({"l", 0, 1, 1.0, 1.0, LinkKind::signal, std::nullopt});
    std::vector<Vec3> x{{1, 0, 1}, {1, 0, 1}};
    auto f = zeros(2);
    accumulate_link_forces(g, x, Config{}, f);
    EXPECT_NEAR(norm(f[0]), 1.0, 1e-12);
    EXPECT_EQ(f[0].y, 0.0);
    EXPECT_EQ(f[0] + f[1], Vec3{});
}

TEST(Jitter, AntisymmetricUnitHorizontal) {
    for (std::size_t a = 0; a < 20; ++a) {
        const auto d = jitter_direction(5, a, a + 7);
        EXPECT_NEAR(norm(d), 1.0, 1e-12);
        EXPECT_EQ(d.y, 0.0);
        EXPECT_EQ(d, -jitter_direction(5, a + 7, a));
    }
}

TEST(AnchorForces, SoftAnchorSpring) {
    auto g = loose(1);
    g.nodes[0].anchor = Anchor{{1, 0, 0}, false};
    std::vector<Vec3> x{{3, 0, 0}};
    auto f = zeros(1);
    accumulate_anchor_forces(g, x, Config{}, f);
    EXPECT_EQ(f[0], (Vec3{-2, 0, 0}));
    g.nodes[0].anchor->hard = true;
    f = zeros(1);
    accumulate_anchor_forces(g, x, Config{}, f);
    EXPECT_EQ(f[0], Vec3{});
}

TEST(ChargeForces, TwoLikeChargesRepel) {
    auto g = loose(2, -30.0);
    std::vector<Vec3> x{{0, 0, 0}, {3, 0, 0}};
    auto f = zeros(2);
    accumulate_charge_forces(g, x, Config{}, f);
    EXPECT_NEAR(f[0].x, -100.0, 1e-12);  // 900 / 9
    EXPECT_EQ(f[0] + f[1], Vec3{});
}

TEST(ChargeForces, SofteningCapsShortRange) {
    auto g = loose(2, -30.0);
    std::vector<Vec3> x{{0, 0, 0}, {0.01, 0, 0}};
    auto f = zeros(2);
    accumulate_charge_forces(g, x, Config{}, 0.0, f);
    EXPECT_NEAR(f[1].x, 900.0 / 0.01, 1e-6);
}

TEST(ChargeForces, ThetaZeroMatchesDirectSum) {
    Prng rng(123);
    const std::size_t n = 50;
    auto g = loose(n);
    std::vector<Vec3> x(n);
    std::vector<oracle::P3> xo(n);
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = {rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
        xo[i] = {x[i].x, x[i].y, x[i].z};
        q[i] = g.nodes[i].charge = rng.uniform(-40, -5);
    }
    const auto expect = oracle::direct_coulomb(xo, q, 0.1);
    auto f = zeros(n);
    accumulate_charge_forces(g, x, Config{}, 0.0, f);
    for (std::size_t i = 0; i < n; ++i) EXPECT_LE(rel(f[i], expect[i]), 1e-12) << i;
}

TEST(ChargeForces, HundredNodesWithinTwoPercent) {
    Prng rng(9);
    const std::size_t n = 100;
    auto g = loose(n);
    std::vector<Vec3> x(n);
    std::vector<oracle::P3> xo(n);
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = {rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
        xo[i] = {x[i].x, x[i].y, x[i].z};
        q[i] = g.nodes[i].charge = -30.0;
    }
    const auto expect = oracle::direct_coulomb(xo, q, 0.1);
    auto f = zeros(n);
    accumulate_charge_forces(g, x, Config{}, 0.5, f);
    for (std::size_t i = 0; i < n; ++i) EXPECT_LE(rel(f[i], expect[i]), 0.02) << i;
}

TEST(ChargeForces, ThreadCountDoesNotChangeBits) {
    const auto d = generate_synthetic(57, 212, 21, 5, 3);
    Config c;
    const auto g = build_layout_graph(d, {}, c);
    const auto s = init_positions(g, c);
    auto f1 = zeros(g.size());
    accumulate_charge_forces(g, s.positions, c, f1);
    c.threads = 4;
    auto f4 = zeros(g.size());
    accumulate_charge_forces(g, s.positions, c, f4);
    EXPECT_EQ(f1, f4);
}

TEST(Octree, CoincidentParticlesShareALeaf) {
    std::vector<Vec3> x{{1, 1, 1}, {1, 1, 1}, {-1, 0, 0}};
    std::vector<double> q{1, 1, 1};
    std::vector<std::size_t> m{0, 1, 2};
    ChargeOctree t(x, q, m);
    EXPECT_EQ(t.leaf_members().size(), 3u);
    EXPECT_DOUBLE_EQ(t.root().charge, 3.0);
    int seen = 0;
    t.walk(0, 0.0, [](const auto&) { FAIL(); }, [&](std::size_t) { ++seen; });
    EXPECT_EQ(seen, 2);
}

TEST(GroupingForces, Examples) {
    SimGraph g;
    g.add_node(node("room", NodeKind::room, 0));
    g.add_node(node("a", NodeKind::sensor, 0));
    g.add_node(node("b", NodeKind::sensor, 0));
    g.add_node(node("room2", NodeKind::room, 3));
    g.add_node(node("c", NodeKind::sensor, 3));
    std::vector<Vec3> x{{0, 0, 0}, {0, 0, 0}, {4, 0, 0}, {0, 0, 0}, {100, 0, 0}};
    auto f = zeros(5);
    accumulate_grouping_forces(g, x, Config{}, f);
    EXPECT_NEAR(f[1].x, 0.2, 1e-15);
    EXPECT_NEAR(f[2].x, -0.2, 1e-15);
    EXPECT_EQ(f[4], Vec3{});  // alone in its room, other rooms ignored
    EXPECT_EQ(f[0], Vec3{});
}

TEST(RoomRepulsion, Examples) {
    SimGraph g;
    g.add_node(node("A", NodeKind::room, 0, 0));
    g.add_node(node("B", NodeKind::room, 1, 0));
    g.add_node(node("C", NodeKind::room, 2, 1));
    std::vector<Vec3> x{{0, 0, 0}, {10, 0, 0}, {5, 4, 0}};
    auto f = zeros(3);
    accumulate_room_repulsion(g, x, Config{}, f);
    EXPECT_NEAR(f[0].x, -20.0, 1e-12);
    EXPECT_NEAR(f[1].x, 20.0, 1e-12);
    EXPECT_EQ(f[2], Vec3{});

    SimGraph single;
    single.add_node(node("A", NodeKind::room, 0));
    auto f1 = zeros(1);
    accumulate_room_repulsion(single, std::vector<Vec3>{{0, 0, 0}}, Config{}, f1);
    EXPECT_EQ(f1[0], Vec3{});
}

TEST(FloorRepulsion, DisabledByDefault) {
    SimGraph g;
    g.add_node(node("a", NodeKind::sensor, 0, 0));
    g.add_node(node("b", NodeKind::sensor, 1, 1));
    std::vector<Vec3> x{{0, 0, 0}, {0, 0, 0}};
    auto f = zeros(2);
    accumulate_floor_repulsion(g, x, Config{}, f);
    EXPECT_EQ(f[0], Vec3{});
}

TEST(FloorRepulsion, EnabledCoincidentAdjacentFloors) {
    SimGraph g;
    g.add_node(node("a", NodeKind::sensor, 0, 0));
    g.add_node(node("b", NodeKind::sensor, 1, 1));
    g.add_node(node("c", NodeKind::sensor, 2, 0));
    Config c;
    c.floor_pinning = false;
    c.floor_repulsion_enabled = true;
    std::vector<Vec3> x{{0, 0, 0}, {0, 0, 0}, {5, 0, 0}};
    auto f = zeros(3);
    accumulate_floor_repulsion(g, x, c, f);
    EXPECT_LT(f[0].y, 0.0);
    EXPECT_GT(f[1].y, 0.0);
    EXPECT_EQ(f[0].y + f[1].y + f[2].y, 0.0);
    EXPECT_NEAR(f[1].y, 2 * 50.0 / 0.5, 1e-12);  // pushed by a and c, both at dy = 0
}

// ---- step / constraints ------------------------------------------------------

TEST(Step, ZeroForcesOnlyDecayAlpha) {
    auto g = loose(3);
    Config c;
    auto s = init_positions(g, c);
    const auto before = s.positions;
    step(g, s, c);
    EXPECT_EQ(s.positions, before);
    EXPECT_EQ(s.tick, 1);
    EXPECT_EQ(s.alpha, 1.0 * (1.0 - 0.0228));
}

TEST(Step, FreeNodeAdvancesByVelocity) {
    auto g = loose(1);
    Config c;
    c.velocity_decay = 1.0;
    SimulationState s{{{0, 0, 0}}, {{1, 0, 0}}, {{0, 0, 0}}, 1.0, 0, false};
    step(g, s, c);
    EXPECT_EQ(s.positions[0], (Vec3{1, 0, 0}));
    EXPECT_EQ(s.velocities[0], (Vec3{1, 0, 0}));
}

TEST(Step, HarmonicOscillatorEnergy) {
    auto g = loose(1);
    g.nodes[0].anchor = Anchor{{0, 0, 0}, false};
    Config c;
    c.dt = 0.01;
    c.velocity_decay = 1.0;
    c.alpha_decay = 0.0;
    SimulationState s{{{1, 0, 0}}, {{0, 0, 0}}, {{-1, 0, 0}}, 1.0, 0, false};
    auto energy = [&] { return 0.5 * norm2(s.velocities[0]) + 0.5 * norm2(s.positions[0]); };
    const double e0 = energy();
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
        step(g, s, c);
        worst = std::max(worst, std::abs(energy() - e0) / e0);
    }
    EXPECT_LT(worst, 1e-3);
    // phase stays close to the analytic cos(t)
    EXPECT_NEAR(s.positions[0].x, std::cos(100.0), 1e-2);
}

TEST(Pinning, Examples) {
    SimGraph g;
    g.add_node(node("a", NodeKind::sensor, 0, 2));
    g.add_node(node("b", NodeKind::sensor, 1, 0));
    g.add_node(node("c", NodeKind::sensor, 2, 0));
    g.nodes[2].anchor = Anchor{{5, 1, 5}, true};
    SimulationState s{{{1, 8.3, 1}, {2, 0, 2}, {0, 0, 0}}, {{1, 1, 1}, {1, 0, 1}, {3, 3, 3}}, zeros(3), 1, 0, false};
    apply_floor_pinning(g, s);
    EXPECT_EQ(s.positions[0], (Vec3{1, 8, 1}));
    EXPECT_EQ(s.velocities[0], (Vec3{1, 0, 1}));
    EXPECT_EQ(s.positions[1], (Vec3{2, 0, 2}));
    EXPECT_EQ(s.positions[2], (Vec3{5, 1, 5}));
    EXPECT_EQ(s.velocities[2], Vec3{});
}

TEST(Collisions, EqualMassSplit) {
    auto g = loose(2, 0.0, 0.25);
    std::vector<Vec3> x{{0, 0, 0}, {0.3, 0, 0}};
    resolve_collisions(g, x, Config{});
    EXPECT_NEAR(x[0].x, -0.1, 1e-12);
    EXPECT_NEAR(x[1].x, 0.4, 1e-12);
    EXPECT_GE(norm(x[1] - x[0]), 0.5 - 1e-12);
}

TEST(Collisions, UntouchedCases) {
    auto g = loose(2, 0.0, 0.25);
    std::vector<Vec3> x{{0, 0, 0}, {0.6, 0, 0}};
    const auto before = x;
    resolve_collisions(g, x, Config{});
    EXPECT_EQ(x, before);

    SimGraph h;
    h.add_node(node("room", NodeKind::room, 0));
    h.add_node(node("s", NodeKind::sensor, 0, 0, 0.0, 0.25));
    std::vector<Vec3> y{{1, 0, 1}, {1, 0, 1}};
    resolve_collisions(h, y, Config{});
    EXPECT_EQ(y[0], (Vec3{1, 0, 1}));
    EXPECT_EQ(y[1], (Vec3{1, 0, 1}));
}

TEST(Collisions, HardAnchorDoesNotMove) {
    auto g = loose(2, 0.0, 0.25);
    g.nodes[0].anchor = Anchor{{0, 0, 0}, true};
    std::vector<Vec3> x{{0, 0, 0}, {0.3, 0, 0}};
    resolve_collisions(g, x, Config{});
    EXPECT_EQ(x[0], Vec3{});
    EXPECT_NEAR(x[1].x, 0.5, 1e-12);
}

TEST(Collisions, BroadPhaseMatchesAllPairs) {
    Prng rng(4);
    auto g = loose(300, 0.0, 0.4);
    std::vector<Vec3> x(300);
    for (auto& p : x) p = {rng.uniform(-5, 5), 0, rng.uniform(-5, 5)};
    std::vector<std::pair<std::size_t, std::size_t>> brute;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (norm(x[j] - x[i]) < 0.8) brute.emplace_back(i, j);
    EXPECT_EQ(overlapping_pairs(g, x), brute);
}

TEST(Engine, NonFiniteStateIsReported) {
    auto g = loose(2, -1e308);
    Config c;
    auto s = init_positions(g, c);
    EXPECT_THROW(step(g, s, c), NonFiniteStateError);
}

TEST(Engine, InertiaFloorCoversSpringHubs) {
    auto g = loose(3);
    g.add_link({"a", 0, 1, 1, 0.7, LinkKind::signal, std::nullopt});
    g.add_link({"b", 0, 2, 1, 0.7, LinkKind::signal, std::nullopt});
    Config c;
    const auto m = integration_masses(g, c);
    EXPECT_DOUBLE_EQ(m[0], 1.4);
    EXPECT_DOUBLE_EQ(m[1], 1.0);
    c.dt = 0.01;
    EXPECT_DOUBLE_EQ(integration_masses(g, c)[0], 1.0);
}

// ---- run ---------------------------------------------------------------------

TEST(Run, ConvergesAtClosedFormTick) {
    Config c;
    const auto expect = static_cast<std::int64_t>(std::ceil(std::log(0.001) / std::log(1 - 0.0228)));
    EXPECT_EQ(expect, 300);
    const auto r = run_to_convergence(loose(2), c);
    EXPECT_EQ(r.ticks, expect);
    EXPECT_TRUE(r.state.converged);
    EXPECT_LT(r.state.alpha, c.alpha_min);
}

TEST(Run, AlphaScheduleStrictlyDecreasing) {
    Config c;
    auto g = loose(1);
    auto s = init_positions(g, c);
    double prev = s.alpha;
    for (int k = 1; k <= 300; ++k) {
        step(g, s, c);
        EXPECT_EQ(s.alpha, alpha_at(c, k));
        EXPECT_NEAR(s.alpha, std::pow(1 - c.alpha_decay, k), 1e-12);
        EXPECT_LT(s.alpha, prev);
        prev = s.alpha;
    }
}

TEST(Run, EmptyGraph) {
    const auto r = run_to_convergence(SimGraph{}, Config{});
    EXPECT_TRUE(r.state.converged);
    EXPECT_TRUE(r.state.positions.empty());
}

TEST(Run, MaxTicksCaps) {
    Config c;
    c.max_ticks = 10;
    EXPECT_EQ(run_to_convergence(loose(2), c).ticks, 10);
    c.max_ticks = 0;
    EXPECT_EQ(run_to_convergence(loose(2), c).ticks, 0);
}

TEST(Run, BitIdenticalAcrossRunsAndThreads) {
    const auto d = generate_synthetic(10, 50, 3, 3, 5);
    Config c;
    const auto g = build_layout_graph(d, {}, c);
    const auto a = run_to_convergence(g, c);
    const auto b = run_to_convergence(g, c);
    EXPECT_EQ(a.state, b.state);
    c.threads = 3;
    EXPECT_EQ(run_to_convergence(g, c).state, a.state);
}

TEST(Run, PinnedAfterEveryTickAndNoOverlaps) {
    const auto d = generate_synthetic(10, 50, 3, 3, 2);
    Config c;
    const auto g = build_layout_graph(d, {}, c);
    auto s = init_positions(g, c);
    while (!s.converged) {
        step(g, s, c);
        for (std::size_t i = 0; i < g.size(); ++i) ASSERT_EQ(s.positions[i].y, g.nodes[i].pinned_y);
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (g.nodes[i].radius == 0 || g.nodes[j].radius == 0) continue;
            EXPECT_GE(norm(s.positions[i] - s.positions[j]), g.nodes[i].radius + g.nodes[j].radius - 1e-6);
        }
}

TEST(Run, TwoNodeSpringSettlesAtRest) {
    auto g = loose(2, 0.0, 0.25);
    g.add_link({"l", 0, 1, 1.0, 0.7, LinkKind::signal, std::nullopt});
    for (std::uint64_t seed : {1u, 2u, 3u, 42u}) {
        Config c;
        c.seed = seed;
        const auto r = run_to_convergence(g, c);
        EXPECT_NEAR(norm(r.state.positions[1] - r.state.positions[0]), 1.0, 0.01) << seed;
    }
}

// ---- config --------------------------------------------------------------------

TEST(Config, RoundTripAndRejections) {
    Config c;
    c.seed = 99;
    c.theta = 0.7;
    c.floor_pinning = false;
    const auto back = parse_config(canonical_dump(to_json(c)));
    EXPECT_EQ(back.seed, 99u);
    EXPECT_EQ(back.theta, 0.7);
    EXPECT_FALSE(back.floor_pinning);
    EXPECT_EQ(parse_config("{}").alpha_decay, 0.0228);
    EXPECT_THROW(parse_config(R"({"thetta": 1})"), SchemaError);
    EXPECT_THROW(parse_config(R"({"floor_pinning": 1})"), SchemaError);
    EXPECT_THROW(parse_config(R"({"max_ticks": 1.5})"), SchemaError);
    EXPECT_THROW(parse_config(R"({"alpha_decay": 1.5})"), ArgumentError);
    EXPECT_THROW(parse_config("[1]"), SchemaError);
    EXPECT_THROW(parse_config("{"), SyntaxError);
}
