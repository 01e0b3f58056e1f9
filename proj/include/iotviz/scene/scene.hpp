#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "iotviz/core/canonical_json.hpp"
#include "iotviz/core/error.hpp"
#include "iotviz/core/vec3.hpp"
#include "iotviz/metadata/document.hpp"
#include "iotviz/scene/color.hpp"
#include "iotviz/skin/aabb.hpp"

namespace iotviz {

struct SceneNode {
    std::string node_id;
    std::string kind;  // room | sensor | gateway
    std::string room_id;
    int level_index = 0;
    Vec3 position;
    double radius = 0.0;
    friend bool operator==(const SceneNode&, const SceneNode&) = default;
};

struct SceneLink {
    std::string link_id;
    std::string from;
    std::string to;
    std::optional<double> rssi_dbm;
    Rgb color_rgb;
    std::string kind;  // signal | sensor_room | gateway_room | adjacency
    friend bool operator==(const SceneLink&, const SceneLink&) = default;
};

struct SceneDocument {
    std::string scene_version;
    std::string building_id;
    std::vector<SceneNode> nodes;
    std::vector<SceneLink> links;
    std::vector<RoomBox> rooms;
    std::vector<FloorSlab> floors;
    std::optional<Aabb> envelope;  // absent when no room could be skinned
    std::vector<std::string> warnings;
    friend bool operator==(const SceneDocument&, const SceneDocument&) = default;
};

inline constexpr std::string_view kNodeKinds[] = {"room", "sensor", "gateway"};
inline constexpr std::string_view kLinkKinds[] = {"signal", "sensor_room", "gateway_room", "adjacency"};

namespace detail {

inline bool one_of(std::string_view v, std::span<const std::string_view> options) {
    for (const auto o : options)
        if (v == o) return true;
    return false;
}

inline ordered_json to_json(const Aabb& b) {
    ordered_json j;
    j["min"] = iotviz::to_json(b.min);
    j["max"] = iotviz::to_json(b.max);
    return j;
}

inline Aabb get_aabb(const json& j, std::string_view where) {
    require_object(j, where, {"min", "max"});
    return {get_vec3(j, where, "min"), get_vec3(j, where, "max")};
}

}  // namespace detail

// Invariants every published scene must satisfy. Throws SchemaError or
// ReferenceError naming the first violation.
inline void validate_scene(const SceneDocument& s) {
    std::set<std::string> ids;
    for (const auto& n : s.nodes) {
        if (n.node_id.empty()) throw SchemaError("scene node with empty node_id");
        if (!ids.insert(n.node_id).second) throw DuplicateIdError("duplicate scene node '" + n.node_id + "'");
        if (!detail::one_of(n.kind, kNodeKinds)) throw SchemaError("node '" + n.node_id + "' has unknown kind");
        if (!is_finite(n.position) || !std::isfinite(n.radius) || n.radius < 0.0)
            throw SchemaError("node '" + n.node_id + "' has a bad position or radius");
    }
    std::set<std::string> link_ids;
    for (const auto& l : s.links) {
        if (!link_ids.insert(l.link_id).second) throw DuplicateIdError("duplicate scene link '" + l.link_id + "'");
        if (!ids.count(l.from) || !ids.count(l.to))
            throw ReferenceError("link '" + l.link_id + "' references a node missing from the scene");
        if (!detail::one_of(l.kind, kLinkKinds)) throw SchemaError("link '" + l.link_id + "' has unknown kind");
        if (l.rssi_dbm && !std::isfinite(*l.rssi_dbm)) throw SchemaError("link '" + l.link_id + "' rssi not finite");
    }
    auto check_box = [](const Aabb& b, const std::string& what) {
        if (!is_finite(b.min) || !is_finite(b.max) || !b.valid()) throw SchemaError(what + " has min > max");
    };
    for (const auto& r : s.rooms) check_box(r.box, "room box '" + r.room_id + "'");
    for (const auto& f : s.floors) check_box(f.extent, "floor slab " + std::to_string(f.level_index));
    if (s.envelope) check_box(*s.envelope, "envelope");
}

// Key order is fixed by this function and documented in
// schemas/scene.schema.json.
inline ordered_json to_json(const SceneDocument& s) {
    ordered_json j;
    j["scene_version"] = s.scene_version;
    j["building_id"] = s.building_id;
    j["nodes"] = ordered_json::array();
    for (const auto& n : s.nodes) {
        ordered_json e;
        e["node_id"] = n.node_id;
        e["kind"] = n.kind;
        e["room_id"] = n.room_id;
        e["level_index"] = n.level_index;
        e["position"] = to_json(n.position);
        e["radius"] = n.radius;
        j["nodes"].push_back(std::move(e));
    }
    j["links"] = ordered_json::array();
    for (const auto& l : s.links) {
        ordered_json e;
        e["link_id"] = l.link_id;
        e["from"] = l.from;
        e["to"] = l.to;
        e["rssi_dbm"] = l.rssi_dbm ? ordered_json(*l.rssi_dbm) : ordered_json(nullptr);
        e["color_rgb"] = ordered_json::array({l.color_rgb.r, l.color_rgb.g, l.color_rgb.b});
        e["kind"] = l.kind;
        j["links"].push_back(std::move(e));
    }
    j["rooms"] = ordered_json::array();
    for (const auto& r : s.rooms) {
        ordered_json e;
        e["room_id"] = r.room_id;
        e["label"] = r.label;
        e["level_index"] = r.level_index;
        e["box"] = detail::to_json(r.box);
        j["rooms"].push_back(std::move(e));
    }
    j["floors"] = ordered_json::array();
    for (const auto& f : s.floors) {
        ordered_json e;
        e["level_index"] = f.level_index;
        e["plane_y"] = f.plane_y;
        e["extent"] = detail::to_json(f.extent);
        j["floors"].push_back(std::move(e));
    }
    j["envelope"] = s.envelope ? detail::to_json(*s.envelope) : ordered_json(nullptr);
    j["warnings"] = s.warnings;
    return j;
}

inline std::string to_scene_json(const SceneDocument& s) { return canonical_dump(to_json(s)); }

inline SceneDocument parse_scene_json(std::string_view text) {
    using detail::json;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("scene document is not valid JSON: ") + e.what());
    }
    detail::require_object(root, "scene",
                           {"scene_version", "building_id", "nodes", "links", "rooms", "floors", "envelope", "warnings"});
    auto array_of = [&](const char* key) -> const json& {
        const auto& v = detail::require_field(root, "scene", key);
        if (!v.is_array()) throw SchemaError(std::string("scene field '") + key + "' must be an array");
        return v;
    };

    SceneDocument s;
    s.scene_version = detail::get_string(root, "scene", "scene_version");
    s.building_id = detail::get_string(root, "scene", "building_id");
    for (const auto& n : array_of("nodes")) {
        detail::require_object(n, "scene node", {"node_id", "kind", "room_id", "level_index", "position", "radius"});
        s.nodes.push_back({detail::get_id(n, "scene node", "node_id"), detail::get_string(n, "scene node", "kind"),
                           detail::get_string(n, "scene node", "room_id"), detail::get_int(n, "scene node", "level_index"),
                           detail::get_vec3(n, "scene node", "position"), detail::get_number(n, "scene node", "radius")});
    }
    for (const auto& l : array_of("links")) {
        detail::require_object(l, "scene link", {"link_id", "from", "to", "rssi_dbm", "color_rgb", "kind"});
        SceneLink link;
        link.link_id = detail::get_id(l, "scene link", "link_id");
        link.from = detail::get_id(l, "scene link", "from");
        link.to = detail::get_id(l, "scene link", "to");
        const auto& rssi = detail::require_field(l, "scene link", "rssi_dbm");
        if (!rssi.is_null()) link.rssi_dbm = detail::number_value(rssi, "scene link", "rssi_dbm");
        const auto& c = detail::require_field(l, "scene link", "color_rgb");
        if (!c.is_array() || c.size() != 3) throw SchemaError("scene link: color_rgb must hold 3 integers");
        std::uint8_t rgb[3];
        for (std::size_t k = 0; k < 3; ++k) {
            if (!c[k].is_number_integer() || c[k].get<std::int64_t>() < 0 || c[k].get<std::int64_t>() > 255)
                throw SchemaError("scene link: color components must be integers in [0, 255]");
            rgb[k] = static_cast<std::uint8_t>(c[k].get<std::int64_t>());
        }
        link.color_rgb = {rgb[0], rgb[1], rgb[2]};
        link.kind = detail::get_string(l, "scene link", "kind");
        s.links.push_back(std::move(link));
    }
    for (const auto& r : array_of("rooms")) {
        detail::require_object(r, "scene room", {"room_id", "label", "level_index", "box"});
        s.rooms.push_back({detail::get_id(r, "scene room", "room_id"),
                           detail::get_aabb(detail::require_field(r, "scene room", "box"), "room box"),
                           detail::get_string(r, "scene room", "label"), detail::get_int(r, "scene room", "level_index")});
    }
    for (const auto& f : array_of("floors")) {
        detail::require_object(f, "scene floor", {"level_index", "plane_y", "extent"});
        s.floors.push_back({detail::get_int(f, "scene floor", "level_index"),
                            detail::get_number(f, "scene floor", "plane_y"),
                            detail::get_aabb(detail::require_field(f, "scene floor", "extent"), "floor extent")});
    }
    const auto& env = detail::require_field(root, "scene", "envelope");
    if (!env.is_null()) s.envelope = detail::get_aabb(env, "envelope");
    for (const auto& w : array_of("warnings")) {
        if (!w.is_string()) throw SchemaError("scene warnings must be strings");
        s.warnings.push_back(w.get<std::string>());
    }
    validate_scene(s);
    return s;
}

}  // namespace iotviz
