#pragma once

#include <string>
#include <vector>

#include "iotviz/core/canonical_json.hpp"
#include "iotviz/core/hash.hpp"
#include "iotviz/metadata/document.hpp"
#include "iotviz/scene/color.hpp"
#include "iotviz/scene/scene.hpp"
#include "iotviz/sim/config.hpp"
#include "iotviz/sim/engine.hpp"
#include "iotviz/sim/graph.hpp"
#include "iotviz/skin/skinning.hpp"

namespace iotviz {

// Version stamp of a scene: a hash over the canonical metadata document and
// the canonical config (which carries the seed). Same inputs, same version.
// The worker count is left out: it never changes the result.
inline std::string scene_version_for(const MetadataDocument& doc, const Config& config) {
    auto cfg = to_json(config);
    cfg.erase("threads");
    Fnv1a64 h;
    h.update("iotviz-scene/1\n");
    h.update(serialize_document(doc));
    h.update("\n");
    h.update(canonical_dump(cfg));
    return to_hex(h.digest());
}

// Converged particle cloud -> scene document. Rooms without devices get no
// box and a warning instead.
inline SceneDocument build_scene(const SimGraph& g, const SimulationState& s, const MetadataDocument& doc,
                                 const Config& config = {}, const ColorRamp& ramp = {}) {
    if (s.positions.size() != g.size()) throw ArgumentError("state does not match graph");
    SceneDocument scene;
    scene.scene_version = scene_version_for(doc, config);
    scene.building_id = doc.building_id;

    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& n = g.nodes[i];
        scene.nodes.push_back({n.node_id, std::string(to_string(n.kind)), n.room_id, n.level_index, s.positions[i], n.radius});
    }
    for (const auto& l : g.links) {
        const Rgb color = l.rssi_dbm ? color_for_rssi(*l.rssi_dbm, ramp) : kStructuralGray;
        scene.links.push_back({l.link_id, g.nodes[l.from].node_id, g.nodes[l.to].node_id, l.rssi_dbm, color,
                               std::string(to_string(l.kind))});
    }

    std::vector<std::vector<Vec3>> members(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.nodes[i].kind != NodeKind::room) members[g.nodes[i].room_index].push_back(s.positions[i]);
    for (const auto& room : doc.rooms) {
        const auto r = g.index_of(room.room_id);
        if (members[r].empty()) {
            scene.warnings.push_back("room '" + room.room_id + "' has no devices; no box generated");
            continue;
        }
        scene.rooms.push_back({room.room_id, room_aabb(members[r], room, config), room.label, g.nodes[r].level_index});
    }

    if (!scene.rooms.empty()) {
        scene.envelope = building_aabb(scene.rooms, config);
        scene.floors = floor_slabs(doc.floors, *scene.envelope, config);
    } else if (!doc.floors.empty()) {
        scene.warnings.push_back("no room boxes; envelope and floor slabs omitted");
    }
    return scene;
}

}  // namespace iotviz
