#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>

#include <httplib.h>

#include "iotviz/core/error.hpp"

namespace iotviz {

// Where serve reads metadata from: a local path, or an http:// URL.
using MetadataSource = std::function<std::string()>;

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Error("error while reading '" + path.string() + "'");
    return ss.str();
}

inline std::string fetch_url(const std::string& url) {
    constexpr std::string_view scheme = "http://";
    if (url.rfind(scheme, 0) != 0) throw ArgumentError("only http:// URLs are supported: '" + url + "'");
    const auto slash = url.find('/', scheme.size());
    const std::string origin = url.substr(0, slash);
    const std::string path = slash == std::string::npos ? "/" : url.substr(slash);
    httplib::Client client(origin);
    client.set_connection_timeout(5);
    client.set_read_timeout(10);
    auto res = client.Get(path);
    if (!res) throw Error("GET " + url + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw Error("GET " + url + " returned HTTP " + std::to_string(res->status));
    return res->body;
}

inline bool is_url(std::string_view s) { return s.find("://") != std::string_view::npos; }

inline MetadataSource make_source(const std::string& location) {
    if (is_url(location)) {
        if (location.rfind("http://", 0) != 0) throw ArgumentError("only http:// URLs are supported: '" + location + "'");
        return [location] { return fetch_url(location); };
    }
    return [location] { return read_file(location); };
}

}  // namespace iotviz
