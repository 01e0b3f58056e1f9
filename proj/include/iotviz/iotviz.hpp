#pragma once

#include "iotviz/metadata/adjacency.hpp"
#include "iotviz/metadata/document.hpp"
#include "iotviz/metadata/path_loss.hpp"
#include "iotviz/metadata/synthetic.hpp"
#include "iotviz/scene/color.hpp"
#include "iotviz/scene/gltf.hpp"
#include "iotviz/scene/scene.hpp"
#include "iotviz/sim/engine.hpp"
#include "iotviz/skin/build_scene.hpp"
#include "iotviz/service/pipeline.hpp"
