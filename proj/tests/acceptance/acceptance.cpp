// One line per acceptance criterion, PASS or FAIL, with the measured value
// next to its threshold. Exit status is the number of failures.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "iotviz/service/cli.hpp"
#include "support/gltf_check.hpp"
#include "support/oracles.hpp"
#include "support/scenarios.hpp"

using namespace iotviz;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

// Runs a criterion; an exception counts as a failure with its message.
void criterion(int id, const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [ok, detail] = body();
        report(id, name, ok, detail);
    } catch (const std::exception& e) {
        report(id, name, false, std::string("exception: ") + e.what());
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

SimGraph free_nodes(std::size_t n, double charge) {
    SimGraph g;
    for (std::size_t i = 0; i < n; ++i) {
        SimNode node;
        node.node_id = "n" + std::to_string(i);
        node.room_id = node.node_id;
        node.room_index = i;
        node.charge = charge;
        g.add_node(node);
    }
    return g;
}

std::string slurp(const std::string& path) { return read_file(path); }

int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "iotviz");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace

int main() {
    // 1. undamped oscillator through the engine's own step()
    criterion(1, "integrator fidelity", [] {
        auto g = free_nodes(1, 0.0);
        g.nodes[0].anchor = Anchor{{0, 0, 0}, false};
        Config c;
        c.dt = 0.01;
        c.velocity_decay = 1.0;
        c.alpha_decay = 0.0;  // alpha held at 1
        SimulationState s{{{1, 0, 0}}, {{0, 0, 0}}, {{-1, 0, 0}}, 1.0, 0, false};
        const auto energy = [&] { return 0.5 * norm2(s.velocities[0]) + 0.5 * norm2(s.positions[0]); };
        const double e0 = energy();
        const auto t0 = std::chrono::steady_clock::now();
        double drift = 0;
        for (int k = 0; k < 10000; ++k) {
            step(g, s, c);
            drift = std::max(drift, std::abs(energy() - e0) / e0);
        }
        const double secs = seconds_since(t0);
        return std::pair{drift < 1e-3 && secs < 1.0,
                         fmt("max relative energy drift %.3g (< 1e-3) over 1e4 steps, %.3f s (< 1 s)", drift, secs)};
    });

    // 2. octree vs an independent direct sum
    criterion(2, "Barnes-Hut oracle equivalence", [] {
        const auto t0 = std::chrono::steady_clock::now();
        double worst_exact = 0, worst_bh = 0;
        const int clouds = 20;
        for (int seed = 1; seed <= clouds; ++seed) {
            Prng rng(static_cast<std::uint64_t>(seed));
            const std::size_t n = 100;
            auto g = free_nodes(n, -30.0);
            std::vector<Vec3> x(n);
            std::vector<oracle::P3> xo(n);
            std::vector<double> q(n, -30.0);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = {rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
                xo[i] = {x[i].x, x[i].y, x[i].z};
            }
            const auto expect = oracle::direct_coulomb(xo, q, Config{}.charge_softening_m);
            std::vector<Vec3> exact(n), approx(n);
            accumulate_charge_forces(g, x, Config{}, 0.0, exact);
            accumulate_charge_forces(g, x, Config{}, 0.5, approx);
            for (std::size_t i = 0; i < n; ++i) {
                const double ref = oracle::length(expect[i]);
                auto err = [&](const Vec3& f) {
                    return oracle::length({f.x - expect[i][0], f.y - expect[i][1], f.z - expect[i][2]}) / ref;
                };
                worst_exact = std::max(worst_exact, err(exact[i]));
                worst_bh = std::max(worst_bh, err(approx[i]));
            }
        }
        const double secs = seconds_since(t0);
        return std::pair{worst_exact <= 1e-12 && worst_bh <= 0.02 && secs < 1.0,
                         fmt("20 clouds x 100 nodes: theta=0 worst rel %.3g (<= 1e-12), theta=0.5 worst per-node rel %.4f "
                             "(<= 0.02), %.3f s (< 1 s)",
                             worst_exact, worst_bh, secs)};
    });

    // 3. a lone spring settles at its rest length
    criterion(3, "spring convergence", [] {
        auto g = free_nodes(2, 0.0);
        Config c;
        g.add_link({"a--b", 0, 1, 1.0, c.signal_link_stiffness, LinkKind::signal, std::nullopt});
        const auto r = run_to_convergence(g, c);
        const double d = norm(r.state.positions[1] - r.state.positions[0]);
        const double err = std::abs(d - 1.0);
        return std::pair{err <= 0.01, fmt("converged distance %.6f m after %.0f ticks, |d - 1| = %.2e (<= 0.01)", d,
                                          static_cast<double>(r.ticks), err)};
    });

    // 4. reference building
    criterion(4, "reference-scenario regression", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const auto doc = scenarios::reference();
        const auto cfg = scenarios::reference_config();
        const auto scene = simulate_document(doc, cfg).scene;
        const double secs = seconds_since(t0);

        const bool a = scene.nodes.size() == 63;
        bool b = true;
        for (const auto& n : scene.nodes) {
            const double y = n.position.y;
            b = b && (y == 0.0 || y == 4.0 || y == 8.0) && y == n.level_index * 4.0;
        }
        const auto cl = scenarios::clustering(scene);
        const bool c = cl.intra < cl.inter;
        double overlap = 0;
        for (std::size_t i = 0; i < scene.rooms.size(); ++i)
            for (std::size_t j = i + 1; j < scene.rooms.size(); ++j) {
                if (scene.rooms[i].level_index != scene.rooms[j].level_index) continue;
                const auto& p = scene.rooms[i].box;
                const auto& q = scene.rooms[j].box;
                overlap += oracle::box_overlap({p.min.x, p.min.y, p.min.z}, {p.max.x, p.max.y, p.max.z},
                                               {q.min.x, q.min.y, q.min.z}, {q.max.x, q.max.y, q.max.z});
            }
        const bool d = overlap == 0.0 && scene.rooms.size() == 10;
        double worst_pen = 0;
        for (std::size_t i = 0; i < scene.nodes.size(); ++i)
            for (std::size_t j = i + 1; j < scene.nodes.size(); ++j) {
                const auto& p = scene.nodes[i];
                const auto& q = scene.nodes[j];
                if (p.kind == "room" || q.kind == "room") continue;
                const double gap = oracle::distance({p.position.x, p.position.y, p.position.z},
                                                    {q.position.x, q.position.y, q.position.z});
                worst_pen = std::max(worst_pen, p.radius + q.radius - gap);
            }
        const bool e = worst_pen <= 1e-6;
        std::string detail = "seed " + std::to_string(scenarios::kReferenceSeed) +
                             ": (a) nodes=" + std::to_string(scene.nodes.size()) + (a ? " ok" : " WRONG") +
                             "; (b) y on {0,4,8} " + (b ? "ok" : "VIOLATED") +
                             fmt("; (c) intra %.2f m < inter %.2f m", cl.intra, cl.inter) + (c ? " ok" : " VIOLATED") +
                             fmt("; (d) same-floor box overlap %.3g m^3", overlap) + (d ? " ok" : " VIOLATED") +
                             fmt("; (e) worst device penetration %.3g m (<= 1e-6)", worst_pen) +
                             fmt("; %.3f s (< 2 s)", secs);
        return std::pair{a && b && c && d && e && secs < 2.0, detail};
    });

    // 5. case-study scales
    criterion(5, "case-study scale and speed", [] {
        auto t0 = std::chrono::steady_clock::now();
        const auto big = simulate_document(scenarios::uniten(), Config{});
        const double t_uniten = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        const auto small = simulate_document(scenarios::sdu(), Config{});
        const double t_sdu = seconds_since(t0);
        const bool ok = big.ticks <= 300 && big.scene.nodes.size() == 290 && t_uniten < 5.0 && small.ticks <= 300 &&
                        small.scene.rooms.size() == 17 && small.scene.nodes.size() == 110 && t_sdu < 2.0;
        return std::pair{ok, "UNITEN 57r/212s/21g/5f: " + std::to_string(big.scene.nodes.size()) + " nodes, " +
                                 std::to_string(big.ticks) + " ticks (<= 300), " + fmt("%.3f s (< 5 s)", t_uniten) +
                                 "; SDU 17r/88s/5g: " + std::to_string(small.scene.nodes.size()) + " nodes, " +
                                 std::to_string(small.ticks) + " ticks, " + fmt("%.3f s (< 2 s)", t_sdu)};
    });

    const fs::path work = fs::temp_directory_path() / ("iotviz-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(work);

    // 6. simulate twice through the command-line entry point
    criterion(6, "end-to-end determinism", [&] {
        const auto in = (work / "reference.json").string();
        std::ofstream(in, std::ios::binary) << serialize_document(scenarios::reference());
        const auto seed = std::to_string(scenarios::kReferenceSeed);
        const int c1 = run_cli({"simulate", "--input", in, "--out", (work / "run1.json").string(), "--seed", seed});
        const int c2 = run_cli({"simulate", "--input", in, "--out", (work / "run2.json").string(), "--seed", seed});
        const auto a = slurp((work / "run1.json").string());
        const auto b = slurp((work / "run2.json").string());
        const auto va = parse_scene_json(a).scene_version;
        const auto vb = parse_scene_json(b).scene_version;
        return std::pair{c1 == 0 && c2 == 0 && a == b && va == vb,
                         "exit codes " + std::to_string(c1) + "/" + std::to_string(c2) + ", " + std::to_string(a.size()) +
                             " bytes, outputs " + (a == b ? "byte-identical" : "DIFFER") + ", versions " + va + "/" + vb};
    });

    // 7. metadata and scene round trips, glTF structural validation
    criterion(7, "serialization", [] {
        std::vector<MetadataDocument> docs{scenarios::reference(), scenarios::uniten(), scenarios::sdu(),
                                           generate_synthetic(0, 0, 0, 1, 1)};
        // every optional section populated
        auto rich = generate_synthetic(3, 6, 1, 2, 4);
        rich.rooms[0].known_size = RoomSize{4, 5, 3};
        rich.materials = MaterialTable{{{"brick", 8.5}, {"glass", 2.0}}};
        rich.links[0].wall_materials = std::vector<std::string>{"brick", "glass"};
        rich.adjacency_hints = std::vector<AdjacencyHint>{{"R000", "R002", 0.75}};
        rich.anchors = std::vector<AnchorHint>{{"G000", {1.5, 0, -2.25}, true}, {"S0001", {0.1, 4, 0.2}, false}};
        docs.push_back(rich);
        int meta_ok = 0, scene_ok = 0, gltf_ok = 0;
        std::string problems;
        for (const auto& d : docs) {
            const auto text = serialize_document(d);
            const auto back = parse_document(text);
            if (back == d && serialize_document(back) == text) ++meta_ok;
            const auto scene = simulate_document(d, Config{}).scene;
            const auto stext = to_scene_json(scene);
            const auto sback = parse_scene_json(stext);
            if (sback == scene && to_scene_json(sback) == stext) ++scene_ok;
            const auto report = gltf_check::check(to_gltf(scene));
            const int expected_lines = static_cast<int>(scene.links.size()) + (scene.envelope ? 1 : 0);
            if (report.ok() && report.line_primitives == expected_lines &&
                report.names_by_prefix.count("link") == (scene.links.empty() ? 0u : 1u))
                ++gltf_ok;
            else
                problems += report.summary();
        }
        const int n = static_cast<int>(docs.size());
        return std::pair{meta_ok == n && scene_ok == n && gltf_ok == n,
                         "metadata round trips " + std::to_string(meta_ok) + "/" + std::to_string(n) +
                             ", scene round trips " + std::to_string(scene_ok) + "/" + std::to_string(n) +
                             ", glTF structurally valid " + std::to_string(gltf_ok) + "/" + std::to_string(n) +
                             (problems.empty() ? "" : " [" + problems + "]")};
    });

    // 8. readers hammer the live server while the poller republishes
    criterion(8, "serve atomicity", [] {
        const auto doc_a = serialize_document(generate_synthetic(6, 24, 2, 2, 1));
        const auto doc_b = serialize_document(generate_synthetic(6, 25, 2, 2, 1));
        std::atomic<int> which{0};
        SnapshotStore store;
        Poller poller([&] { return which.load() % 2 == 0 ? doc_a : doc_b; }, Config{}, store);
        poller.poll_once();
        SceneServer server(store, [&] { return poller.last_poll(); });
        const int port = server.bind("127.0.0.1", 0);
        std::thread listener([&] { server.listen_after_bind(); });
        server.wait_until_ready();

        std::set<std::string> bodies;  // every complete scene that was ever published
        std::mutex bodies_mu;
        bodies.insert(store.load()->body);

        std::atomic<bool> done{false};
        std::atomic<long> responses{0}, bad{0};
        std::vector<std::string> first_error;
        std::mutex err_mu;
        auto reader = [&] {
            httplib::Client c("127.0.0.1", port);
            c.set_keep_alive(true);
            while (!done.load()) {
                auto res = c.Get("/api/scene");
                ++responses;
                std::string why;
                if (!res || res->status != 200) {
                    why = "request failed";
                } else {
                    try {
                        const auto scene = parse_scene_json(res->body);
                        if (res->get_header_value("X-Scene-Version") != scene.scene_version) why = "header/body version mismatch";
                        std::lock_guard lock(bodies_mu);
                        if (why.empty() && !bodies.count(res->body)) why = "body is not a published snapshot";
                    } catch (const std::exception& e) {
                        why = e.what();
                    }
                }
                if (!why.empty()) {
                    ++bad;
                    std::lock_guard lock(err_mu);
                    if (first_error.empty()) first_error.push_back(why);
                }
            }
        };
        std::vector<std::thread> readers;
        for (int r = 0; r < 4; ++r) readers.emplace_back(reader);

        int published = 0;
        for (int k = 1; k <= 100; ++k) {
            which = k;
            {
                // register the body before it becomes visible to readers
                const auto next = simulate_bytes(which % 2 == 0 ? doc_a : doc_b, Config{});
                std::lock_guard lock(bodies_mu);
                bodies.insert(to_scene_json(next.scene));
            }
            if (poller.poll_once() == Poller::Outcome::published) ++published;
        }
        done = true;
        for (auto& t : readers) t.join();
        server.stop();
        listener.join();
        const bool ok = published == 100 && bad == 0 && responses > 0;
        return std::pair{ok, std::to_string(published) + " republishes, " + std::to_string(responses.load()) +
                                 " concurrent responses, " + std::to_string(bad.load()) + " invalid" +
                                 (first_error.empty() ? "" : " (first: " + first_error.front() + ")")};
    });

    // 9. link colors
    criterion(9, "color ramp", [] {
        const bool hi = color_for_rssi(-30) == Rgb{0, 255, 0};
        const bool lo = color_for_rssi(-100) == Rgb{255, 0, 0};
        bool monotone = true;
        Rgb prev = color_for_rssi(-130);
        int samples = 0;
        for (double r = -130; r <= 0; r += 0.05, ++samples) {
            const auto c = color_for_rssi(r);
            monotone = monotone && c.r <= prev.r && c.g >= prev.g && c.b == 0;
            prev = c;
        }
        return std::pair{hi && lo && monotone, std::string("-30 dBm -> (0,255,0) ") + (hi ? "ok" : "WRONG") +
                                                   ", -100 dBm -> (255,0,0) " + (lo ? "ok" : "WRONG") + ", " +
                                                   std::to_string(samples) + "-point sweep monotone " +
                                                   (monotone ? "ok" : "VIOLATED")};
    });

    fs::remove_all(work);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures;
}
