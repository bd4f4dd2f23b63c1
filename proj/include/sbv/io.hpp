#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbv/attention_masks.hpp"
#include "sbv/canvas.hpp"
#include "sbv/concept_bag.hpp"
#include "sbv/edge_sampler.hpp"
#include "sbv/flops_audit.hpp"
#include "sbv/geometry.hpp"
#include "sbv/proposal_prep.hpp"
#include "sbv/view_switch.hpp"

namespace sbv {

inline constexpr int kSchemaVersion = 1;

// Bad input: malformed files, out-of-range config values (CLI exit code 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant, reported with the failing stage (exit code 3).
struct PipelineError : std::runtime_error {
    PipelineError(const std::string& stage_name, const std::string& message)
        : std::runtime_error(stage_name + ": " + message), stage(stage_name) {}
    std::string stage;
};

struct PipelineConfig {
    double delta = 100.0;            // canvas grid interval
    int edges_per_pair = 2;          // E
    int extra_proposals = 3;         // N
    int topk = 300;                  // k
    int fallback_bags = 3;           // G
    double distance_weight = 0.5;    // lambda
    double aspect_weight = 0.5;      // alpha
    double distance_threshold = 0.4; // eta
    double sigma_scale = 4.0;        // s
    double delta_global = 0.0;
    double delta_middle = 0.8;
    double delta_local = 1.0;
    double tau_switch = 0.5;
    double coverage = 0.9;           // rho
    std::uint64_t seed = 0;
    double overlap_threshold = 0.0;
    int directions_per_proposal = 8;
    std::optional<double> min_area;  // absent: (0.01 * diagonal)^2

    void validate() const;
    PrepConfig prep() const;
    EdgeConfig edges() const;
    ConceptConfig concepts() const;
    ViewWeights weights() const;
    NoiseMaskConfig noise() const;

    bool operator==(const PipelineConfig&) const = default;
};

struct SceneInput {
    ImageDims image;
    std::vector<ScoredBox> proposals;
    std::vector<ScoredBox> topk;
    std::vector<BBox> ground_truth;
    std::vector<SimilarityMap> similarity_maps;
    std::vector<double> chi;
    std::vector<std::vector<double>> neighbor_embeddings;
};

struct MaskSummary {
    int crop_index = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double threshold = 0.0;
    int masked = 0;
    int unmasked = 0; // zero entries, class token included
};

struct ViewRecord {
    int proposal_id = 0;
    int window_index = 0; // index into the bag's local views
    SwitchDecision decision;
    BBox crop; // the chosen view's box
};

struct SampleOutput {
    ImageDims image;
    std::vector<ScoredBox> reduced;
    std::vector<ScoredBox> added;
    std::vector<Concept> nu;
    std::vector<ConceptBag> bags;
    std::vector<EdgePath> edges;
    std::vector<ViewRecord> views;
    std::vector<MaskSummary> noise_summaries;
    std::vector<std::vector<double>> view_masks; // per crop, class token first
    FlopsReport flops;
};

// JSON text formats. Serialization is deterministic (sorted keys, shortest
// round-trip numbers); parse(serialize(x)) == x and re-serializing is
// byte-identical. Unknown keys are rejected.
std::string serialize_config(const PipelineConfig& cfg);
PipelineConfig parse_config(const std::string& text);

std::string serialize_scene(const SceneInput& scene);
// Clamps boxes to the image (logged to stderr when anything moved).
SceneInput parse_scene(const std::string& text);

// Sample files embed the generating config (seed included) next to the
// payload so golden files are auditable.
std::string serialize_sample(const SampleOutput& output,
                             const PipelineConfig& cfg);
struct SampleFile {
    PipelineConfig config;
    SampleOutput output;
};
SampleFile parse_sample(const std::string& text);

std::string serialize_canvas(const Canvas& canvas);

struct AuditSide {
    std::uint64_t crops = 0;
    std::uint64_t unmasked = 0; // visible keys per attention window
};
struct AuditInput {
    VitProfile profile;
    AuditSide baseline;
    AuditSide ours;
};
AuditInput parse_audit(const std::string& text);
std::string serialize_audit(const FlopsReport& baseline,
                            const FlopsReport& ours);

struct BenchRow {
    std::string strategy;
    int groups = 0;
    int regions = 0;
    FlopsReport flops;
};
std::string serialize_bench(const std::vector<BenchRow>& rows);
std::string bench_text_table(const std::vector<BenchRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace sbv
