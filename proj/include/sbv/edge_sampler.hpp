#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "sbv/canvas.hpp"
#include "sbv/geometry.hpp"

namespace sbv {

struct EdgeConfig {
    int edges_per_pair = 2;    // E
    int max_steps = 0;         // 0 = default to cols + rows
    std::uint64_t seed = 0;

    void validate() const;
    int resolved_max_steps(const Canvas& canvas) const;
};

enum class Termination { Reached, DeadEnd, LeftImage, Budget };

struct EdgePath {
    int start = 0; // proposal identifiers
    int end = 0;
    std::vector<GridCoord> steps;
    std::set<int> hit_concepts; // indices into the reduced set
    Termination terminated = Termination::DeadEnd;
};

struct PairId {
    int i = 0;
    int j = 0;
};

// Walks E seeded paths between the grid coordinates nearest the two box
// centers. Directions that increase the L1 distance to the destination,
// enter another proposal, or leave the grid are zeroed; the rest are
// sampled proportionally to the canvas probabilities at the current
// coordinate (uniformly when those are all zero).
std::vector<EdgePath> generate_edges(const Canvas& canvas, const BBox& start,
                                     const BBox& end,
                                     const std::vector<BBox>& others,
                                     const EdgeConfig& cfg, PairId pair_id);

// Intersection of the hit sets of all Reached paths of one pair. A box is
// hit when any step coordinate falls inside it or within one grid interval
// of it; the canvas supplies that interval and the pixel mapping.
std::set<int> extract_pair_concepts(const std::vector<EdgePath>& paths,
                                    const std::vector<ScoredBox>& reduced,
                                    const Canvas& canvas);

// Union of pair concepts over all unordered distinct pairs in r_added. The
// returned indices point into `reduced`.
std::set<int> collect_visual_concept_ids(const Canvas& canvas,
                                         const std::vector<ScoredBox>& r_added,
                                         const std::vector<ScoredBox>& reduced,
                                         const EdgeConfig& cfg);

std::vector<ScoredBox> collect_visual_concepts(const Canvas& canvas,
                                               const std::vector<ScoredBox>& r_added,
                                               const std::vector<ScoredBox>& reduced,
                                               const EdgeConfig& cfg);

// All paths for every pair, in pair order with hit sets filled; used by the
// pipeline so the SVG renderer can draw the traversals that produced ν.
std::vector<EdgePath> collect_all_edges(const Canvas& canvas,
                                        const std::vector<ScoredBox>& r_added,
                                        const std::vector<ScoredBox>& reduced,
                                        const EdgeConfig& cfg);

} // namespace sbv
