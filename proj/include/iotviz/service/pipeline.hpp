#pragma once

#include <cstdint>
#include <string_view>

#include "iotviz/metadata/document.hpp"
#include "iotviz/metadata/path_loss.hpp"
#include "iotviz/scene/scene.hpp"
#include "iotviz/sim/config.hpp"
#include "iotviz/sim/engine.hpp"
#include "iotviz/sim/graph.hpp"
#include "iotviz/skin/build_scene.hpp"

namespace iotviz {

struct PipelineResult {
    SceneDocument scene;
    std::int64_t ticks = 0;
};

// parse -> graph -> simulate -> skin.
inline PipelineResult simulate_document(const MetadataDocument& doc, const Config& config,
                                        const PathLossParams& params = {}) {
    config.validate();
    const auto graph = build_layout_graph(doc, params, config);
    const auto run = run_to_convergence(graph, config);
    return {build_scene(graph, run.state, doc, config), run.ticks};
}

inline PipelineResult simulate_bytes(std::string_view metadata_text, const Config& config,
                                     const PathLossParams& params = {}) {
    return simulate_document(parse_document(metadata_text), config, params);
}

}  // namespace iotviz
