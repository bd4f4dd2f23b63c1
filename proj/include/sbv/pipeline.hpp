#pragma once

#include "sbv/io.hpp"

namespace sbv {

// Full deterministic run: prep -> canvas -> edges -> concepts -> bags ->
// views -> masks -> flops. Scenes without proposals yield an empty output
// with a zero-region flops report. Stage failures surface as PipelineError
// with the stage name.
SampleOutput run_pipeline(const SceneInput& scene, const PipelineConfig& cfg);

} // namespace sbv
