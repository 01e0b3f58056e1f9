#pragma once

#include <filesystem>
#include <functional>
#include <string>

#include <httplib.h>

#include "iotviz/core/canonical_json.hpp"
#include "iotviz/service/snapshot.hpp"

namespace iotviz {

inline constexpr const char* kPlaceholderPage =
    "<!doctype html><html><head><meta charset=\"utf-8\"><title>iotviz</title></head><body>"
    "<p>No viewer assets installed. The scene is at <a href=\"/api/scene\">/api/scene</a>.</p></body></html>";

// Strips surrounding quotes and a weak prefix from an If-None-Match value.
inline std::string bare_etag(std::string v) {
    if (v.rfind("W/", 0) == 0) v.erase(0, 2);
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
    return v;
}

// HTTP front of serve mode. Handlers read only published snapshots.
class SceneServer {
public:
    using LastPollFn = std::function<std::string()>;

    SceneServer(const SnapshotStore& store, LastPollFn last_poll, const std::filesystem::path& viewer_dir = {})
        : store_(store), last_poll_(std::move(last_poll)) {
        server_.Get("/api/scene", [this](const httplib::Request& req, httplib::Response& res) {
            const auto snap = store_.load();
            if (!snap) {
                res.status = 503;
                res.set_content(R"({"error":"no scene published yet"})", "application/json");
                return;
            }
            res.set_header("X-Scene-Version", snap->scene_version);
            res.set_header("ETag", "\"" + snap->scene_version + "\"");
            res.set_header("Cache-Control", "no-cache");
            if (req.has_header("If-None-Match") && bare_etag(req.get_header_value("If-None-Match")) == snap->scene_version) {
                res.status = 304;
                return;
            }
            res.set_content(snap->body, "application/json");
        });
        server_.Get("/api/version", [this](const httplib::Request&, httplib::Response& res) {
            const auto snap = store_.load();
            ordered_json j;
            j["scene_version"] = snap ? ordered_json(snap->scene_version) : ordered_json(nullptr);
            j["tick_count"] = snap ? ordered_json(snap->tick_count) : ordered_json(nullptr);
            j["last_poll"] = last_poll_ ? ordered_json(last_poll_()) : ordered_json(nullptr);
            res.set_header("Cache-Control", "no-cache");
            res.set_content(canonical_dump(j), "application/json");
        });
        server_.Get("/healthz", [](const httplib::Request&, httplib::Response& res) { res.set_content("ok", "text/plain"); });

        if (!viewer_dir.empty() && std::filesystem::is_directory(viewer_dir)) {
            server_.set_mount_point("/", viewer_dir.string());
        } else {
            server_.Get("/", [](const httplib::Request&, httplib::Response& res) {
                res.set_content(kPlaceholderPage, "text/html");
            });
        }
    }

    // Returns the bound port, or -1. Port 0 picks a free one.
    int bind(const std::string& host, int port) {
        if (port == 0) return server_.bind_to_any_port(host);
        return server_.bind_to_port(host, port) ? port : -1;
    }

    bool listen_after_bind() { return server_.listen_after_bind(); }
    void stop() { server_.stop(); }
    void wait_until_ready() const { server_.wait_until_ready(); }
    bool running() const { return server_.is_running(); }

private:
    const SnapshotStore& store_;
    LastPollFn last_poll_;
    httplib::Server server_;
};

}  // namespace iotviz
