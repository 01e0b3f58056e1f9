#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>

#include "iotviz/scene/scene.hpp"

namespace iotviz {

// One published scene. Never mutated after publication; the serialized body
// is computed once so readers only copy a pointer.
struct Snapshot {
    SceneDocument scene;
    std::string body;  // canonical scene JSON
    std::string scene_version;
    std::int64_t tick_count = 0;
    std::string last_poll;  // UTC, ISO 8601
};

inline std::shared_ptr<const Snapshot> make_snapshot(SceneDocument scene, std::int64_t ticks, std::string last_poll) {
    auto s = std::make_shared<Snapshot>();
    s->body = to_scene_json(scene);
    s->scene_version = scene.scene_version;
    s->scene = std::move(scene);
    s->tick_count = ticks;
    s->last_poll = std::move(last_poll);
    return s;
}

// Holder for the current snapshot. publish() swaps the pointer under a
// mutex; a reader that loaded the old pointer keeps a complete old scene
// alive for as long as it needs it.
class SnapshotStore {
public:
    std::shared_ptr<const Snapshot> load() const {
        std::lock_guard lock(mu_);
        return current_;
    }

    void publish(std::shared_ptr<const Snapshot> next) {
        std::lock_guard lock(mu_);
        current_ = std::move(next);
        ++publications_;
    }

    std::uint64_t publications() const {
        std::lock_guard lock(mu_);
        return publications_;
    }

private:
    mutable std::mutex mu_;
    std::shared_ptr<const Snapshot> current_;
    std::uint64_t publications_ = 0;
};

}  // namespace iotviz
