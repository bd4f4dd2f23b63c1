#pragma once

#include <optional>
#include <set>
#include <string>

#include "sbv/io.hpp"

namespace sbv {

enum class SvgLayer { Canvas, Edges, Concepts, Views };

std::optional<SvgLayer> layer_from_name(const std::string& name);

// Standalone SVG of the scene: image frame plus proposals (green) and extra
// proposals (yellow) always; optional layers add the canvas probability
// field, edge trails (light blue), reduced boxes and concept windows (light
// purple), and chosen view crops (blue). Deterministic output, stable
// element order. The config supplies the grid interval for the canvas layer.
std::string render_svg(const SampleOutput& output, const SceneInput& scene,
                       const std::set<SvgLayer>& layers,
                       const PipelineConfig& cfg);

} // namespace sbv
