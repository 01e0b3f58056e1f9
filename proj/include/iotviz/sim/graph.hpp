#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "iotviz/core/error.hpp"
#include "iotviz/core/vec3.hpp"
#include "iotviz/metadata/adjacency.hpp"
#include "iotviz/metadata/document.hpp"
#include "iotviz/metadata/path_loss.hpp"
#include "iotviz/sim/config.hpp"

namespace iotviz {

enum class NodeKind { room, sensor, gateway };

inline std::string_view to_string(NodeKind k) {
    switch (k) {
        case NodeKind::room: return "room";
        case NodeKind::sensor: return "sensor";
        case NodeKind::gateway: return "gateway";
    }
    return "?";
}

enum class LinkKind { signal, sensor_room, gateway_room, adjacency };

inline std::string_view to_string(LinkKind k) {
    switch (k) {
        case LinkKind::signal: return "signal";
        case LinkKind::sensor_room: return "sensor_room";
        case LinkKind::gateway_room: return "gateway_room";
        case LinkKind::adjacency: return "adjacency";
    }
    return "?";
}

struct Anchor {
    Vec3 position;
    bool hard = false;
};

struct SimNode {
    std::string node_id;
    NodeKind kind = NodeKind::sensor;
    std::string room_id;  // own id for room nodes
    std::size_t room_index = 0;  // index of the room node this node belongs to
    int level_index = 0;
    double mass = 1.0;
    double charge = 0.0;
    double radius = 0.0;
    double pinned_y = 0.0;
    std::optional<Anchor> anchor;

    bool hard_anchored() const { return anchor && anchor->hard; }
};

struct SimLink {
    std::string link_id;
    std::size_t from = 0;
    std::size_t to = 0;
    double rest_length = 1.0;
    double stiffness = 1.0;
    LinkKind kind = LinkKind::signal;
    std::optional<double> rssi_dbm;  // measured value, signal links only
};

struct SimGraph {
    std::vector<SimNode> nodes;
    std::vector<SimLink> links;
    std::unordered_map<std::string, std::size_t> index;

    std::size_t size() const { return nodes.size(); }

    std::size_t index_of(const std::string& id) const {
        auto it = index.find(id);
        if (it == index.end()) throw ReferenceError("unknown node '" + id + "'");
        return it->second;
    }

    std::size_t add_node(SimNode node) {
        const auto i = nodes.size();
        if (!index.emplace(node.node_id, i).second) throw DuplicateIdError("duplicate node '" + node.node_id + "'");
        nodes.push_back(std::move(node));
        return i;
    }

    void add_link(SimLink link) {
        if (link.from >= nodes.size() || link.to >= nodes.size() || link.from == link.to)
            throw ArgumentError("link '" + link.link_id + "' has invalid endpoints");
        links.push_back(std::move(link));
    }
};

inline std::string link_id_for(std::string_view from, std::string_view to) {
    return std::string(from) + "--" + std::string(to);
}

// Translate a validated metadata document into the particle model.
//
// Node order: rooms (document order), then devices (document order). Link
// order: one signal link per LinkRecord (document order), then one
// structural link per device to its room node (device order). Adjacency
// springs are not added here; see add_adjacency_links.
inline SimGraph build_sim_graph(const MetadataDocument& doc, const PathLossParams& params = {},
                                const Config& config = {}) {
    params.validate();
    SimGraph g;
    std::unordered_map<std::string, int> floor_level;
    for (const auto& f : doc.floors) floor_level.emplace(f.floor_id, f.level_index);
    std::unordered_map<std::string, const AnchorHint*> anchors;
    if (doc.anchors)
        for (const auto& a : *doc.anchors) anchors[a.node_id] = &a;

    auto attach_anchor = [&](SimNode& n) {
        auto it = anchors.find(n.node_id);
        if (it == anchors.end()) return;
        n.anchor = Anchor{it->second->position_m, it->second->hard};
        // a hard anchor fixes the node completely, so it defines the plane
        if (it->second->hard) n.pinned_y = it->second->position_m.y;
    };

    for (const auto& r : doc.rooms) {
        SimNode n;
        n.node_id = r.room_id;
        n.kind = NodeKind::room;
        n.room_id = r.room_id;
        n.room_index = g.size();
        n.level_index = floor_level.at(r.floor_id);
        n.mass = config.room_mass;
        n.charge = config.charge_room;
        n.radius = 0.0;
        n.pinned_y = n.level_index * config.floor_height_m;
        attach_anchor(n);
        g.add_node(std::move(n));
    }
    for (const auto& d : doc.devices) {
        SimNode n;
        n.node_id = d.device_id;
        n.kind = d.kind == DeviceKind::sensor ? NodeKind::sensor : NodeKind::gateway;
        n.room_id = d.room_id;
        n.room_index = g.index_of(d.room_id);
        n.level_index = g.nodes[n.room_index].level_index;
        n.mass = config.device_mass;
        n.charge = config.charge_device;
        n.radius = d.kind == DeviceKind::sensor ? config.sensor_radius_m : config.gateway_radius_m;
        n.pinned_y = n.level_index * config.floor_height_m;
        attach_anchor(n);
        g.add_node(std::move(n));
    }

    for (const auto& l : doc.links) {
        const double rssi = corrected_rssi(l, doc.materials);
        g.add_link({link_id_for(l.sensor_id, l.gateway_id), g.index_of(l.sensor_id), g.index_of(l.gateway_id),
                    rssi_to_distance(rssi, params), config.signal_link_stiffness, LinkKind::signal, l.rssi_dbm});
    }
    for (const auto& d : doc.devices) {
        const auto kind = d.kind == DeviceKind::sensor ? LinkKind::sensor_room : LinkKind::gateway_room;
        g.add_link({link_id_for(d.device_id, d.room_id), g.index_of(d.device_id), g.index_of(d.room_id),
                    config.structural_rest_length_m, config.structural_link_stiffness, kind, std::nullopt});
    }
    return g;
}

// Room-to-room springs that pull hinted rooms closer than the room
// repulsion alone would leave them. Stiffness scales with hint weight.
inline void add_adjacency_links(SimGraph& g, const std::vector<AdjacencyHint>& hints, const Config& config = {}) {
    for (const auto& h : hints) {
        g.add_link({link_id_for(h.room_a, h.room_b), g.index_of(h.room_a), g.index_of(h.room_b),
                    config.adjacency_rest_length_m, config.adjacency_link_stiffness * h.weight, LinkKind::adjacency,
                    std::nullopt});
    }
}

// The graph the end-to-end pipeline simulates: document translation plus
// inferred and explicit adjacency springs.
inline SimGraph build_layout_graph(const MetadataDocument& doc, const PathLossParams& params = {},
                                   const Config& config = {}) {
    auto g = build_sim_graph(doc, params, config);
    add_adjacency_links(g, infer_adjacency(doc), config);
    return g;
}

}  // namespace iotviz
