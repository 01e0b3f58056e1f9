#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "iotviz/core/error.hpp"
#include "iotviz/metadata/synthetic.hpp"
#include "iotviz/scene/gltf.hpp"
#include "iotviz/scene/scene.hpp"
#include "iotviz/service/http.hpp"
#include "iotviz/service/pipeline.hpp"
#include "iotviz/service/poller.hpp"
#include "iotviz/service/source.hpp"

namespace iotviz::cli {

inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kNonFinite = 3;
inline constexpr int kUsage = 64;

namespace detail {

inline void write_file(const std::string& path, const std::string& bytes) {
    const std::filesystem::path target(path);
    const auto tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp + "'");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw Error("error while writing '" + tmp + "'");
    }
    std::filesystem::rename(tmp, target);
}

inline std::atomic<bool> g_stop{false};
inline void on_signal(int) { g_stop.store(true); }

struct Common {
    std::uint64_t seed = 42;
    std::string config_path;
};

inline Config load_config(const Common& common, const CLI::App& sub) {
    Config c = common.config_path.empty() ? Config{} : parse_config(read_file(common.config_path));
    // an explicit --seed wins over the config file
    if (sub.count("--seed") > 0 || common.config_path.empty()) c.seed = common.seed;
    return c;
}

}  // namespace detail

// Entry point shared by tools/iotviz and the tests. Returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Building digital twin layout engine for IoT metadata"};
    app.require_subcommand(1);
    detail::Common common;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", common.seed, "Random seed")->capture_default_str();
        sub->add_option("--config", common.config_path, "Config JSON file")->check(CLI::ExistingFile);
    };

    std::string input, out_path, scene_path, format, listen = "127.0.0.1:8080", viewer_dir;
    std::optional<std::int64_t> max_ticks;
    std::int64_t rooms = 0, sensors = 0, gateways = 0, floors = 1;
    double poll_interval = 30.0;
    bool reseed = false;

    auto* simulate = app.add_subcommand("simulate", "Lay out a metadata document and write the scene JSON");
    add_common(simulate);
    simulate->add_option("--input", input, "Metadata JSON")->required();
    simulate->add_option("--out", out_path, "Scene JSON to write")->required();
    simulate->add_option("--max-ticks", max_ticks, "Tick cap")->check(CLI::NonNegativeNumber);

    auto* exporter = app.add_subcommand("export", "Convert a scene JSON");
    add_common(exporter);
    exporter->add_option("--scene", scene_path, "Scene JSON")->required();
    exporter->add_option("--format", format, "json or gltf")->required()->check(CLI::IsMember({"json", "gltf"}));
    exporter->add_option("--out", out_path, "Output file")->required();

    auto* generate = app.add_subcommand("generate", "Write a synthetic metadata document");
    add_common(generate);
    generate->add_option("--rooms", rooms)->required()->check(CLI::NonNegativeNumber);
    generate->add_option("--sensors", sensors)->required()->check(CLI::NonNegativeNumber);
    generate->add_option("--gateways", gateways)->required()->check(CLI::NonNegativeNumber);
    generate->add_option("--floors", floors)->required()->check(CLI::NonNegativeNumber);
    generate->add_option("--out", out_path)->required();

    auto* serve = app.add_subcommand("serve", "Poll a metadata source and serve the scene over HTTP");
    add_common(serve);
    serve->add_option("--input", input, "Metadata file path or http:// URL")->required();
    serve->add_option("--listen", listen, "host:port")->capture_default_str();
    serve->add_option("--poll-interval", poll_interval, "Seconds between polls")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    serve->add_flag("--reseed-on-change", reseed, "Derive a new seed for changed metadata");
    serve->add_option("--viewer-dir", viewer_dir, "Static viewer assets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*simulate) {
            Config c = detail::load_config(common, *simulate);
            if (max_ticks) c.max_ticks = *max_ticks;
            const auto r = simulate_bytes(read_file(input), c);
            detail::write_file(out_path, to_scene_json(r.scene));
            out << "ticks=" << r.ticks << " nodes=" << r.scene.nodes.size() << " links=" << r.scene.links.size()
                << " rooms=" << r.scene.rooms.size() << " version=" << r.scene.scene_version << "\n";
            for (const auto& w : r.scene.warnings) err << "warning: " << w << "\n";
            return kOk;
        }
        if (*exporter) {
            const auto scene = parse_scene_json(read_file(scene_path));
            detail::write_file(out_path, format == "gltf" ? to_gltf(scene) : to_scene_json(scene));
            return kOk;
        }
        if (*generate) {
            std::string bytes;
            try {
                bytes = serialize_document(generate_synthetic(rooms, sensors, gateways, floors, common.seed));
            } catch (const ArgumentError& e) {
                err << "error: " << e.what() << "\n";
                return kUsage;
            }
            detail::write_file(out_path, bytes);
            return kOk;
        }
        if (*serve) {
            const Config c = detail::load_config(common, *serve);
            const auto colon = listen.rfind(':');
            int port = -1;
            try {
                if (colon != std::string::npos) port = std::stoi(listen.substr(colon + 1));
            } catch (const std::exception&) {
            }
            if (colon == std::string::npos || port < 0 || port > 65535) {
                err << "error: --listen must be host:port\n";
                return kUsage;
            }
            const std::string host = listen.substr(0, colon);

            SnapshotStore store;
            auto log = [&err](const std::string& m) { err << utc_timestamp() << " warning: " << m << std::endl; };
            Poller poller(make_source(input), c, store, reseed, log);
            if (poller.poll_once() != Poller::Outcome::published) {
                err << "error: initial simulation failed\n";
                return 1;
            }
            SceneServer server(store, [&poller] { return poller.last_poll(); }, viewer_dir);
            const int bound = server.bind(host, port);
            if (bound < 0) {
                err << "error: cannot listen on " << listen << "\n";
                return 1;
            }
            out << "serving on http://" << host << ":" << bound << " version=" << store.load()->scene_version
                << std::endl;

            detail::g_stop.store(false);
            std::signal(SIGINT, detail::on_signal);
            std::signal(SIGTERM, detail::on_signal);
            std::jthread worker([&](std::stop_token st) {
                auto next = std::chrono::steady_clock::now() + std::chrono::duration<double>(poll_interval);
                while (!st.stop_requested() && !detail::g_stop.load()) {
                    std::this_thread::sleep_for(std::chrono::milliseconds(50));
                    if (std::chrono::steady_clock::now() < next) continue;
                    poller.poll_once();
                    next = std::chrono::steady_clock::now() + std::chrono::duration<double>(poll_interval);
                }
                server.stop();
            });
            server.listen_after_bind();
            worker.request_stop();
            return kOk;
        }
    } catch (const NonFiniteStateError& e) {
        err << "error: " << e.what() << "\n";
        return kNonFinite;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kUsage;
}

}  // namespace iotviz::cli
