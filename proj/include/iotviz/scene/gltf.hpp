#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iotviz/core/canonical_json.hpp"
#include "iotviz/scene/scene.hpp"

// glTF 2.0, single file: the binary buffer is embedded as a base64 data URI.
//
// Node names: room/<id> and floor/<level> (unit box scaled to the box
// extent), device/<id> (unit icosphere scaled by radius), hub/<id> for room
// nodes (icosphere at kHubDisplayRadius, they have no physical size),
// link/<id> (two-vertex LINES primitive with COLOR_0), envelope (12 edges).

namespace iotviz {

inline constexpr double kHubDisplayRadius = 0.2;

namespace gltf {

inline constexpr int kFloat = 5126;
inline constexpr int kUnsignedShort = 5123;
inline constexpr int kArrayBuffer = 34962;
inline constexpr int kElementArrayBuffer = 34963;
inline constexpr int kModeLines = 1;
inline constexpr int kModeTriangles = 4;

inline std::string base64(const std::vector<std::uint8_t>& bytes) {
    static constexpr char table[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 2 < bytes.size(); i += 3) {
        const std::uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
        out += table[(v >> 18) & 63];
        out += table[(v >> 12) & 63];
        out += table[(v >> 6) & 63];
        out += table[v & 63];
    }
    if (i < bytes.size()) {
        std::uint32_t v = bytes[i] << 16;
        if (i + 1 < bytes.size()) v |= bytes[i + 1] << 8;
        out += table[(v >> 18) & 63];
        out += table[(v >> 12) & 63];
        out += i + 1 < bytes.size() ? table[(v >> 6) & 63] : '=';
        out += '=';
    }
    return out;
}

struct Mesh {
    std::vector<std::array<float, 3>> positions;
    std::vector<std::uint16_t> indices;
};

inline Mesh unit_box() {
    Mesh m;
    for (int k = 0; k < 8; ++k)
        m.positions.push_back({(k & 1) ? 0.5f : -0.5f, (k & 2) ? 0.5f : -0.5f, (k & 4) ? 0.5f : -0.5f});
    // two counter-clockwise triangles per face, outward facing
    m.indices = {0, 2, 3, 0, 3, 1,  4, 5, 7, 4, 7, 6,  0, 1, 5, 0, 5, 4,
                 2, 6, 7, 2, 7, 3,  0, 4, 6, 0, 6, 2,  1, 3, 7, 1, 7, 5};
    return m;
}

// Icosahedron with each face split in four, projected onto the unit sphere:
// 42 vertices, 80 triangles.
inline Mesh unit_icosphere() {
    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> v = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
                           {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
    const std::vector<std::array<std::uint16_t, 3>> faces = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
        {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
        {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
    std::map<std::pair<std::uint16_t, std::uint16_t>, std::uint16_t> midpoint;
    auto mid = [&](std::uint16_t a, std::uint16_t b) {
        const auto key = std::minmax(a, b);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        v.push_back(0.5 * (v[a] + v[b]));
        const auto idx = static_cast<std::uint16_t>(v.size() - 1);
        midpoint.emplace(key, idx);
        return idx;
    };
    Mesh m;
    for (const auto& f : faces) {
        const auto a = mid(f[0], f[1]);
        const auto b = mid(f[1], f[2]);
        const auto c = mid(f[2], f[0]);
        for (const auto& tri : {std::array{f[0], a, c}, std::array{f[1], b, a}, std::array{f[2], c, b},
                                std::array{a, b, c}})
            m.indices.insert(m.indices.end(), tri.begin(), tri.end());
    }
    for (const auto& p : v) {
        const Vec3 u = p * (1.0 / norm(p));
        m.positions.push_back({static_cast<float>(u.x), static_cast<float>(u.y), static_cast<float>(u.z)});
    }
    return m;
}

class Builder {
public:
    // Returns the accessor index.
    int add_vec3(const std::vector<std::array<float, 3>>& data, bool with_bounds) {
        const auto view = add_view(data.data(), data.size() * sizeof(data[0]), kArrayBuffer);
        ordered_json a;
        a["bufferView"] = view;
        a["componentType"] = kFloat;
        a["count"] = data.size();
        a["type"] = "VEC3";
        if (with_bounds) {
            std::array<double, 3> lo{data[0][0], data[0][1], data[0][2]};
            std::array<double, 3> hi = lo;
            for (const auto& p : data)
                for (std::size_t k = 0; k < 3; ++k) {
                    lo[k] = std::min<double>(lo[k], p[k]);
                    hi[k] = std::max<double>(hi[k], p[k]);
                }
            a["min"] = lo;
            a["max"] = hi;
        }
        accessors_.push_back(std::move(a));
        return static_cast<int>(accessors_.size() - 1);
    }

    int add_indices(const std::vector<std::uint16_t>& data) {
        const auto view = add_view(data.data(), data.size() * sizeof(data[0]), kElementArrayBuffer);
        ordered_json a;
        a["bufferView"] = view;
        a["componentType"] = kUnsignedShort;
        a["count"] = data.size();
        a["type"] = "SCALAR";
        accessors_.push_back(std::move(a));
        return static_cast<int>(accessors_.size() - 1);
    }

    int add_mesh(std::string name, ordered_json primitive) {
        ordered_json m;
        m["name"] = std::move(name);
        m["primitives"] = ordered_json::array({std::move(primitive)});
        meshes_.push_back(std::move(m));
        return static_cast<int>(meshes_.size() - 1);
    }

    int add_triangle_mesh(std::string name, const Mesh& mesh) {
        ordered_json p;
        p["attributes"]["POSITION"] = add_vec3(mesh.positions, true);
        p["indices"] = add_indices(mesh.indices);
        p["mode"] = kModeTriangles;
        return add_mesh(std::move(name), std::move(p));
    }

    int add_lines_mesh(std::string name, const std::vector<std::array<float, 3>>& positions,
                       const std::vector<std::array<float, 3>>& colors) {
        ordered_json p;
        p["attributes"]["POSITION"] = add_vec3(positions, true);
        if (!colors.empty()) p["attributes"]["COLOR_0"] = add_vec3(colors, false);
        p["mode"] = kModeLines;
        return add_mesh(std::move(name), std::move(p));
    }

    void add_node(ordered_json node) { nodes_.push_back(std::move(node)); }

    ordered_json finish() {
        ordered_json root;
        root["asset"]["version"] = "2.0";
        root["asset"]["generator"] = "iotviz";
        root["scene"] = 0;
        ordered_json scene;
        scene["name"] = "building";
        if (!nodes_.empty()) {
            scene["nodes"] = ordered_json::array();
            for (std::size_t i = 0; i < nodes_.size(); ++i) scene["nodes"].push_back(i);
        }
        root["scenes"] = ordered_json::array({std::move(scene)});
        if (!nodes_.empty()) root["nodes"] = std::move(nodes_);
        root["meshes"] = std::move(meshes_);
        root["accessors"] = std::move(accessors_);
        root["bufferViews"] = std::move(views_);
        ordered_json buffer;
        buffer["byteLength"] = bytes_.size();
        buffer["uri"] = "data:application/octet-stream;base64," + base64(bytes_);
        root["buffers"] = ordered_json::array({std::move(buffer)});
        return root;
    }

private:
    int add_view(const void* data, std::size_t size, int target) {
        while (bytes_.size() % 4 != 0) bytes_.push_back(0);
        ordered_json v;
        v["buffer"] = 0;
        v["byteOffset"] = bytes_.size();
        v["byteLength"] = size;
        v["target"] = target;
        const auto* p = static_cast<const std::uint8_t*>(data);
        bytes_.insert(bytes_.end(), p, p + size);
        views_.push_back(std::move(v));
        return static_cast<int>(views_.size() - 1);
    }

    std::vector<std::uint8_t> bytes_;
    ordered_json views_ = ordered_json::array();
    ordered_json accessors_ = ordered_json::array();
    ordered_json meshes_ = ordered_json::array();
    ordered_json nodes_ = ordered_json::array();
};

inline std::array<float, 3> to_float(const Vec3& v) {
    return {static_cast<float>(v.x), static_cast<float>(v.y), static_cast<float>(v.z)};
}

inline ordered_json placed(std::string name, int mesh, const Vec3& translation, const Vec3& scale) {
    ordered_json n;
    n["name"] = std::move(name);
    n["mesh"] = mesh;
    n["translation"] = to_json(translation);
    n["scale"] = to_json(scale);
    return n;
}

}  // namespace gltf

inline ordered_json to_gltf_json(const SceneDocument& scene) {
    gltf::Builder b;
    const int box = b.add_triangle_mesh("box", gltf::unit_box());
    const int sphere = b.add_triangle_mesh("sphere", gltf::unit_icosphere());

    for (const auto& r : scene.rooms) b.add_node(gltf::placed("room/" + r.room_id, box, r.box.center(), r.box.extent()));
    for (const auto& f : scene.floors)
        b.add_node(gltf::placed("floor/" + std::to_string(f.level_index), box, f.extent.center(), f.extent.extent()));
    for (const auto& n : scene.nodes) {
        const bool hub = n.kind == "room";
        const double r = hub ? kHubDisplayRadius : n.radius;
        b.add_node(gltf::placed((hub ? "hub/" : "device/") + n.node_id, sphere, n.position, {r, r, r}));
    }

    std::map<std::string, Vec3> where;
    for (const auto& n : scene.nodes) where[n.node_id] = n.position;
    for (const auto& l : scene.links) {
        const std::array<float, 3> c{l.color_rgb.r / 255.0f, l.color_rgb.g / 255.0f, l.color_rgb.b / 255.0f};
        const int mesh = b.add_lines_mesh("link/" + l.link_id, {gltf::to_float(where.at(l.from)), gltf::to_float(where.at(l.to))},
                                          {c, c});
        ordered_json node;
        node["name"] = "link/" + l.link_id;
        node["mesh"] = mesh;
        b.add_node(std::move(node));
    }

    if (scene.envelope) {
        const auto& e = *scene.envelope;
        std::vector<std::array<float, 3>> corners;
        for (int k = 0; k < 8; ++k)
            corners.push_back(gltf::to_float({(k & 1) ? e.max.x : e.min.x, (k & 2) ? e.max.y : e.min.y,
                                              (k & 4) ? e.max.z : e.min.z}));
        std::vector<std::array<float, 3>> edges;
        for (int k = 0; k < 8; ++k)
            for (int bit = 1; bit < 8; bit <<= 1)
                if (!(k & bit)) {
                    edges.push_back(corners[static_cast<std::size_t>(k)]);
                    edges.push_back(corners[static_cast<std::size_t>(k | bit)]);
                }
        ordered_json node;
        node["name"] = "envelope";
        node["mesh"] = b.add_lines_mesh("envelope", edges, {});
        b.add_node(std::move(node));
    }
    return b.finish();
}

inline std::string to_gltf(const SceneDocument& scene) { return canonical_dump(to_gltf_json(scene)); }

}  // namespace iotviz
