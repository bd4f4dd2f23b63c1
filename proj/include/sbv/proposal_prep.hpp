#pragma once

#include <optional>
#include <vector>

#include "sbv/geometry.hpp"

namespace sbv {

struct PrepConfig {
    int topk = 300;              // k: top proposals considered
    int extra_proposals = 3;     // N: greedily added far-away proposals
    double distance_weight = 0.5;    // lambda
    double distance_threshold = 0.4; // eta, fraction of the image diagonal
    double overlap_threshold = 0.0;  // IoU ceiling for the reduced set
    // Area floor for the reduced set; unset means (0.01 * diagonal)^2.
    std::optional<double> min_area;

    double resolved_min_area(const ImageDims& image) const;
    void validate() const;
};

// The proposal working sets: raw proposals, their top-k scored superset, the
// sparse reduced set, and the augmented set used for edge generation.
struct ProposalSets {
    std::vector<ScoredBox> proposals;
    std::vector<ScoredBox> topk;
    std::vector<ScoredBox> reduced;
    std::vector<ScoredBox> added;
};

// Greedy scan over topk (objectness descending): keeps a box when its IoU
// with every proposal and every previously kept box stays at or below the
// overlap threshold and its area clears the floor.
std::vector<ScoredBox> reduce_nonoverlapping(const std::vector<ScoredBox>& topk,
                                             const std::vector<ScoredBox>& proposals,
                                             const PrepConfig& cfg,
                                             const ImageDims& image);

// lambda * clamp(mean center distance / (eta * diag), 1) + (1 - lambda) * objectness.
double farthest_score(const ScoredBox& candidate, const std::vector<BBox>& anchors,
                      const PrepConfig& cfg, const ImageDims& image);

// N greedy rounds of argmax farthest_score against the proposals plus all
// previously selected extras. Ties go to higher objectness, then lower index.
std::vector<ScoredBox> select_extra(const std::vector<ScoredBox>& reduced,
                                    const std::vector<ScoredBox>& proposals,
                                    const PrepConfig& cfg, const ImageDims& image);

// reduce + select in one step; `added` is proposals followed by the extras.
ProposalSets preprocess(const std::vector<ScoredBox>& proposals,
                        const std::vector<ScoredBox>& topk,
                        const PrepConfig& cfg, const ImageDims& image);

} // namespace sbv
