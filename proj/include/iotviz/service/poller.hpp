#pragma once

#include <chrono>
#include <cstdint>
#include <ctime>
#include <functional>
#include <mutex>
#include <optional>
#include <string>

#include "iotviz/core/hash.hpp"
#include "iotviz/core/prng.hpp"
#include "iotviz/service/pipeline.hpp"
#include "iotviz/service/snapshot.hpp"
#include "iotviz/service/source.hpp"

namespace iotviz {

using LogFn = std::function<void(const std::string&)>;

inline std::string utc_timestamp(std::chrono::system_clock::time_point t = std::chrono::system_clock::now()) {
    const std::time_t tt = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Reads the source, and when its bytes hash differently from the last
// accepted content, re-runs the pipeline and publishes. Failures keep the
// previous snapshot (stale but available).
class Poller {
public:
    enum class Outcome { published, unchanged, fetch_failed, rejected };

    Poller(MetadataSource source, Config config, SnapshotStore& store, bool reseed_on_change = false,
           LogFn log = {})
        : source_(std::move(source)), config_(config), store_(store), reseed_(reseed_on_change), log_(std::move(log)) {}

    Outcome poll_once() {
        const auto now = utc_timestamp();
        std::string bytes;
        try {
            bytes = source_();
        } catch (const std::exception& e) {
            warn(std::string("poll failed, keeping last scene: ") + e.what());
            return Outcome::fetch_failed;
        }
        const auto digest = Fnv1a64{}.update(bytes).digest();
        {
            std::lock_guard lock(mu_);
            last_poll_ = now;
        }
        if (last_hash_ && *last_hash_ == digest) return Outcome::unchanged;

        Config c = config_;
        // reseeding derives the seed from the content, so returning to an
        // earlier document returns to its earlier layout
        if (reseed_) c.seed = splitmix64(config_.seed ^ digest);
        try {
            auto result = simulate_bytes(bytes, c);
            ++simulations_;
            last_hash_ = digest;
            store_.publish(make_snapshot(std::move(result.scene), result.ticks, now));
            return Outcome::published;
        } catch (const std::exception& e) {
            last_hash_ = digest;  // do not retry identical bad content every poll
            warn(std::string("metadata rejected, keeping last scene: ") + e.what());
            return Outcome::rejected;
        }
    }

    std::uint64_t simulations() const { return simulations_; }

    std::string last_poll() const {
        std::lock_guard lock(mu_);
        return last_poll_;
    }

private:
    void warn(const std::string& msg) {
        if (log_) log_(msg);
    }

    MetadataSource source_;
    Config config_;
    SnapshotStore& store_;
    bool reseed_ = false;
    LogFn log_;
    std::optional<std::uint64_t> last_hash_;
    std::uint64_t simulations_ = 0;
    mutable std::mutex mu_;
    std::string last_poll_;
};

}  // namespace iotviz
