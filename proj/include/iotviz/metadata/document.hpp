#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "iotviz/core/canonical_json.hpp"
#include "iotviz/core/error.hpp"
#include "iotviz/core/vec3.hpp"

namespace iotviz {

inline constexpr std::string_view kMetadataSchemaVersion = "1.0";

enum class DeviceKind { sensor, gateway };

inline std::string_view to_string(DeviceKind k) { return k == DeviceKind::sensor ? "sensor" : "gateway"; }

struct RoomSize {
    double width_m = 0.0;   // x
    double depth_m = 0.0;   // z
    double height_m = 0.0;  // y
    friend bool operator==(const RoomSize&, const RoomSize&) = default;
};

struct FloorRecord {
    std::string floor_id;
    int level_index = 0;
    friend bool operator==(const FloorRecord&, const FloorRecord&) = default;
};

struct RoomRecord {
    std::string room_id;
    std::string floor_id;
    std::string label;
    std::optional<RoomSize> known_size;
    friend bool operator==(const RoomRecord&, const RoomRecord&) = default;
};

struct DeviceRecord {
    std::string device_id;
    DeviceKind kind = DeviceKind::sensor;
    std::string room_id;
    friend bool operator==(const DeviceRecord&, const DeviceRecord&) = default;
};

struct LinkRecord {
    std::string sensor_id;
    std::string gateway_id;
    double rssi_dbm = 0.0;
    std::optional<std::vector<std::string>> wall_materials;
    friend bool operator==(const LinkRecord&, const LinkRecord&) = default;
};

// material name -> one-wall traversal loss in dB
struct MaterialTable {
    std::map<std::string, double> entries;
    friend bool operator==(const MaterialTable&, const MaterialTable&) = default;
};

struct AdjacencyHint {
    std::string room_a;
    std::string room_b;
    double weight = 1.0;
    friend bool operator==(const AdjacencyHint&, const AdjacencyHint&) = default;
};

struct AnchorHint {
    std::string node_id;
    Vec3 position_m;
    bool hard = false;
    friend bool operator==(const AnchorHint&, const AnchorHint&) = default;
};

struct MetadataDocument {
    std::string schema_version{kMetadataSchemaVersion};
    std::string building_id;
    std::vector<FloorRecord> floors;
    std::vector<RoomRecord> rooms;
    std::vector<DeviceRecord> devices;
    std::vector<LinkRecord> links;
    std::optional<MaterialTable> materials;
    std::optional<std::vector<AdjacencyHint>> adjacency_hints;
    std::optional<std::vector<AnchorHint>> anchors;
    friend bool operator==(const MetadataDocument&, const MetadataDocument&) = default;

    std::size_t sensor_count() const {
        std::size_t n = 0;
        for (const auto& d : devices) n += d.kind == DeviceKind::sensor ? 1 : 0;
        return n;
    }
    std::size_t gateway_count() const { return devices.size() - sensor_count(); }
};

namespace detail {

using json = nlohmann::json;

inline void require_object(const json& j, std::string_view where, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) throw SchemaError(std::string(where) + ": expected an object");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const auto a : allowed) known = known || key == a;
        if (!known) throw SchemaError(std::string(where) + ": unknown key '" + key + "'");
    }
}

inline const json& require_field(const json& j, std::string_view where, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string(where) + ": missing required field '" + key + "'");
    return *it;
}

inline std::string get_string(const json& j, std::string_view where, const char* key) {
    const auto& v = require_field(j, where, key);
    if (!v.is_string()) throw SchemaError(std::string(where) + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

inline std::string get_id(const json& j, std::string_view where, const char* key) {
    auto s = get_string(j, where, key);
    if (s.empty()) throw SchemaError(std::string(where) + ": field '" + key + "' must be non-empty");
    return s;
}

inline double number_value(const json& v, std::string_view where, std::string_view key) {
    if (!v.is_number()) throw SchemaError(std::string(where) + ": field '" + std::string(key) + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SchemaError(std::string(where) + ": field '" + std::string(key) + "' must be finite");
    return d;
}

inline double get_number(const json& j, std::string_view where, const char* key) {
    return number_value(require_field(j, where, key), where, key);
}

inline int get_int(const json& j, std::string_view where, const char* key) {
    const auto& v = require_field(j, where, key);
    if (!v.is_number_integer()) throw SchemaError(std::string(where) + ": field '" + key + "' must be an integer");
    const auto i = v.get<std::int64_t>();
    if (i < -1000000 || i > 1000000) throw SchemaError(std::string(where) + ": field '" + key + "' out of range");
    return static_cast<int>(i);
}

inline const json* optional_array(const json& root, const char* key) {
    auto it = root.find(key);
    if (it == root.end() || it->is_null()) return nullptr;
    if (!it->is_array()) throw SchemaError(std::string("field '") + key + "' must be an array or null");
    return &*it;
}

inline const json& required_array(const json& root, const char* key) {
    const auto& v = require_field(root, "document", key);
    if (!v.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
    return v;
}

inline Vec3 get_vec3(const json& j, std::string_view where, const char* key) {
    const auto& v = require_field(j, where, key);
    if (!v.is_array() || v.size() != 3)
        throw SchemaError(std::string(where) + ": field '" + key + "' must be an array of 3 numbers");
    return {number_value(v[0], where, key), number_value(v[1], where, key), number_value(v[2], where, key)};
}

inline std::string unordered_key(const std::string& a, const std::string& b) {
    return a < b ? a + '\x1f' + b : b + '\x1f' + a;
}

inline void validate_document(const MetadataDocument& doc) {
    std::unordered_map<std::string, int> floor_level;
    std::unordered_set<int> levels;
    for (const auto& f : doc.floors) {
        if (!floor_level.emplace(f.floor_id, f.level_index).second)
            throw DuplicateIdError("duplicate floor_id '" + f.floor_id + "'");
        if (!levels.insert(f.level_index).second)
            throw DuplicateIdError("duplicate level_index " + std::to_string(f.level_index) + " (floor '" +
                                   f.floor_id + "')");
    }
    std::unordered_set<std::string> rooms;
    for (const auto& r : doc.rooms) {
        if (!rooms.insert(r.room_id).second) throw DuplicateIdError("duplicate room_id '" + r.room_id + "'");
        if (!floor_level.contains(r.floor_id))
            throw ReferenceError("room '" + r.room_id + "' references unknown floor '" + r.floor_id + "'");
    }
    std::unordered_map<std::string, DeviceKind> devices;
    for (const auto& d : doc.devices) {
        if (!devices.emplace(d.device_id, d.kind).second)
            throw DuplicateIdError("duplicate device_id '" + d.device_id + "'");
        if (rooms.contains(d.device_id))
            throw DuplicateIdError("device_id '" + d.device_id + "' collides with a room_id");
        if (!rooms.contains(d.room_id))
            throw ReferenceError("device '" + d.device_id + "' references unknown room '" + d.room_id + "'");
    }
    std::set<std::pair<std::string, std::string>> link_pairs;
    for (const auto& l : doc.links) {
        auto s = devices.find(l.sensor_id);
        if (s == devices.end()) throw ReferenceError("link references unknown sensor '" + l.sensor_id + "'");
        auto g = devices.find(l.gateway_id);
        if (g == devices.end()) throw ReferenceError("link references unknown gateway '" + l.gateway_id + "'");
        if (s->second != DeviceKind::sensor)
            throw SchemaError("link sensor_id '" + l.sensor_id + "' is not a sensor");
        if (g->second != DeviceKind::gateway)
            throw SchemaError("link gateway_id '" + l.gateway_id + "' is not a gateway");
        if (!link_pairs.emplace(l.sensor_id, l.gateway_id).second)
            throw DuplicateIdError("duplicate link '" + l.sensor_id + "' -> '" + l.gateway_id + "'");
    }
    if (doc.materials) {
        for (const auto& [name, db] : doc.materials->entries)
            if (!std::isfinite(db) || db < 0.0)
                throw SchemaError("material '" + name + "' attenuation must be finite and >= 0");
    }
    if (doc.adjacency_hints) {
        std::unordered_set<std::string> pairs;
        for (const auto& h : doc.adjacency_hints.value()) {
            if (h.room_a == h.room_b) throw SchemaError("adjacency hint pairs room '" + h.room_a + "' with itself");
            for (const auto* id : {&h.room_a, &h.room_b})
                if (!rooms.contains(*id)) throw ReferenceError("adjacency hint references unknown room '" + *id + "'");
            if (!(h.weight > 0.0 && h.weight <= 1.0))
                throw SchemaError("adjacency hint weight must be in (0, 1]");
            if (!pairs.insert(unordered_key(h.room_a, h.room_b)).second)
                throw DuplicateIdError("duplicate adjacency hint '" + h.room_a + "' / '" + h.room_b + "'");
        }
    }
    if (doc.anchors) {
        for (const auto& a : doc.anchors.value())
            if (!rooms.contains(a.node_id) && !devices.contains(a.node_id))
                throw ReferenceError("anchor references unknown node '" + a.node_id + "'");
    }
}

}  // namespace detail

// Parse and validate a metadata document (UTF-8 JSON).
//
// Errors, in the order they are checked: SyntaxError for text that is not
// JSON, SchemaError for shape/type/range problems, then DuplicateIdError and
// ReferenceError from the cross-record checks.
inline MetadataDocument parse_document(std::string_view text) {
    using detail::json;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("metadata document is not valid JSON: ") + e.what());
    }
    detail::require_object(root, "document",
                           {"schema_version", "building_id", "floors", "rooms", "devices", "links", "materials",
                            "adjacency_hints", "anchors"});

    MetadataDocument doc;
    doc.schema_version = detail::get_string(root, "document", "schema_version");
    if (doc.schema_version != kMetadataSchemaVersion && doc.schema_version != "1")
        throw SchemaError("unsupported schema_version '" + doc.schema_version + "'");
    doc.building_id = detail::get_string(root, "document", "building_id");

    for (const auto& f : detail::required_array(root, "floors")) {
        detail::require_object(f, "floor", {"floor_id", "level_index"});
        doc.floors.push_back({detail::get_id(f, "floor", "floor_id"), detail::get_int(f, "floor", "level_index")});
    }
    for (const auto& r : detail::required_array(root, "rooms")) {
        detail::require_object(r, "room", {"room_id", "floor_id", "label", "known_size"});
        RoomRecord room;
        room.room_id = detail::get_id(r, "room", "room_id");
        const std::string where = "room '" + room.room_id + "'";
        room.floor_id = detail::get_id(r, where, "floor_id");
        room.label = r.contains("label") ? detail::get_string(r, where, "label") : room.room_id;
        if (auto it = r.find("known_size"); it != r.end() && !it->is_null()) {
            detail::require_object(*it, where + " known_size", {"width_m", "depth_m", "height_m"});
            RoomSize s{detail::get_number(*it, where, "width_m"), detail::get_number(*it, where, "depth_m"),
                       detail::get_number(*it, where, "height_m")};
            if (!(s.width_m > 0 && s.depth_m > 0 && s.height_m > 0))
                throw SchemaError(where + ": known_size extents must be > 0");
            room.known_size = s;
        }
        doc.rooms.push_back(std::move(room));
    }
    for (const auto& d : detail::required_array(root, "devices")) {
        detail::require_object(d, "device", {"device_id", "kind", "room_id"});
        DeviceRecord dev;
        dev.device_id = detail::get_id(d, "device", "device_id");
        const std::string where = "device '" + dev.device_id + "'";
        const auto kind = detail::get_string(d, where, "kind");
        if (kind == "sensor") {
            dev.kind = DeviceKind::sensor;
        } else if (kind == "gateway") {
            dev.kind = DeviceKind::gateway;
        } else {
            throw SchemaError(where + ": unknown kind '" + kind + "'");
        }
        dev.room_id = detail::get_id(d, where, "room_id");
        doc.devices.push_back(std::move(dev));
    }
    if (const auto* links = detail::optional_array(root, "links")) {
        for (const auto& l : *links) {
            detail::require_object(l, "link", {"sensor_id", "gateway_id", "rssi_dbm", "wall_materials"});
            LinkRecord link;
            link.sensor_id = detail::get_id(l, "link", "sensor_id");
            link.gateway_id = detail::get_id(l, "link", "gateway_id");
            link.rssi_dbm = detail::get_number(l, "link", "rssi_dbm");
            if (auto it = l.find("wall_materials"); it != l.end() && !it->is_null()) {
                if (!it->is_array()) throw SchemaError("link: wall_materials must be an array of strings");
                std::vector<std::string> walls;
                for (const auto& w : *it) {
                    if (!w.is_string()) throw SchemaError("link: wall_materials must be an array of strings");
                    walls.push_back(w.get<std::string>());
                }
                link.wall_materials = std::move(walls);
            }
            doc.links.push_back(std::move(link));
        }
    }
    if (auto it = root.find("materials"); it != root.end() && !it->is_null()) {
        if (!it->is_object()) throw SchemaError("materials must be an object of name -> attenuation_db");
        MaterialTable table;
        for (const auto& [name, v] : it->items()) table.entries[name] = detail::number_value(v, "materials", name);
        doc.materials = std::move(table);
    }
    if (const auto* hints = detail::optional_array(root, "adjacency_hints")) {
        std::vector<AdjacencyHint> out;
        for (const auto& h : *hints) {
            detail::require_object(h, "adjacency_hint", {"room_a", "room_b", "weight"});
            AdjacencyHint hint{detail::get_id(h, "adjacency_hint", "room_a"),
                               detail::get_id(h, "adjacency_hint", "room_b"), 1.0};
            if (auto w = h.find("weight"); w != h.end() && !w->is_null())
                hint.weight = detail::number_value(*w, "adjacency_hint", "weight");
            out.push_back(std::move(hint));
        }
        doc.adjacency_hints = std::move(out);
    }
    if (const auto* anchors = detail::optional_array(root, "anchors")) {
        std::vector<AnchorHint> out;
        for (const auto& a : *anchors) {
            detail::require_object(a, "anchor", {"node_id", "position_m", "hard"});
            AnchorHint anchor{detail::get_id(a, "anchor", "node_id"), detail::get_vec3(a, "anchor", "position_m"),
                              false};
            if (auto h = a.find("hard"); h != a.end() && !h->is_null()) {
                if (!h->is_boolean()) throw SchemaError("anchor: field 'hard' must be a boolean");
                anchor.hard = h->get<bool>();
            }
            out.push_back(std::move(anchor));
        }
        doc.anchors = std::move(out);
    }

    detail::validate_document(doc);
    return doc;
}

inline ordered_json to_json(const Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

inline ordered_json to_json(const MetadataDocument& doc) {
    ordered_json root = ordered_json::object();
    root["schema_version"] = doc.schema_version;
    root["building_id"] = doc.building_id;
    auto& floors = root["floors"] = ordered_json::array();
    for (const auto& f : doc.floors) floors.push_back({{"floor_id", f.floor_id}, {"level_index", f.level_index}});
    auto& rooms = root["rooms"] = ordered_json::array();
    for (const auto& r : doc.rooms) {
        ordered_json j{{"room_id", r.room_id}, {"floor_id", r.floor_id}, {"label", r.label}};
        if (r.known_size)
            j["known_size"] = {{"width_m", r.known_size->width_m},
                               {"depth_m", r.known_size->depth_m},
                               {"height_m", r.known_size->height_m}};
        rooms.push_back(std::move(j));
    }
    auto& devices = root["devices"] = ordered_json::array();
    for (const auto& d : doc.devices)
        devices.push_back({{"device_id", d.device_id}, {"kind", to_string(d.kind)}, {"room_id", d.room_id}});
    auto& links = root["links"] = ordered_json::array();
    for (const auto& l : doc.links) {
        ordered_json j{{"sensor_id", l.sensor_id}, {"gateway_id", l.gateway_id}, {"rssi_dbm", l.rssi_dbm}};
        if (l.wall_materials) j["wall_materials"] = *l.wall_materials;
        links.push_back(std::move(j));
    }
    if (doc.materials) {
        auto& m = root["materials"] = ordered_json::object();
        for (const auto& [name, db] : doc.materials->entries) m[name] = db;
    } else {
        root["materials"] = nullptr;
    }
    if (doc.adjacency_hints) {
        auto& hints = root["adjacency_hints"] = ordered_json::array();
        for (const auto& h : *doc.adjacency_hints)
            hints.push_back({{"room_a", h.room_a}, {"room_b", h.room_b}, {"weight", h.weight}});
    } else {
        root["adjacency_hints"] = nullptr;
    }
    if (doc.anchors) {
        auto& anchors = root["anchors"] = ordered_json::array();
        for (const auto& a : *doc.anchors)
            anchors.push_back({{"node_id", a.node_id}, {"position_m", to_json(a.position_m)}, {"hard", a.hard}});
    } else {
        root["anchors"] = nullptr;
    }
    return root;
}

// Canonical text form; parse_document(serialize_document(d)) == d.
inline std::string serialize_document(const MetadataDocument& doc) { return canonical_dump(to_json(doc)); }

}  // namespace iotviz
