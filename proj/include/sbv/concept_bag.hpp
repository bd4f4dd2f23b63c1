#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sbv/geometry.hpp"

namespace sbv {

struct ConceptConfig {
    double distance_weight = 0.5;    // lambda
    double aspect_weight = 0.5;      // alpha
    double distance_threshold = 0.4; // eta, fraction of the image diagonal
    int directions_per_proposal = 8; // 4 cardinal + 4 diagonal sectors
    int fallback_bags = 3;           // G, bags drawn by the fallback sampler

    void validate() const;
};

// A key visual concept: a reduced box plus its identifier (index into the
// reduced set).
struct Concept {
    int id = 0;
    ScoredBox box;
};

struct ConceptWindow {
    int direction = 0;
    int concept_id = 0;
    ScoredBox representative;
    BBox window; // merge(representative, proposal), trimmed
};

struct ConceptBag {
    int proposal_id = 0;
    std::vector<ConceptWindow> windows;
    std::vector<int> directions_retained; // S_i: directions with candidates
    bool fallback = false;                // true iff S_i is empty
    std::vector<BBox> fallback_regions;   // concatenated fallback bags
};

// Sector index of a point around the box center: `directions` half-open
// angular sectors of equal width, sector 0 centered on +x (right), indices
// increasing clockwise in the y-down image frame.
int sector_of(const BBox& proposal, double cx, double cy, int directions);

// Concepts whose center falls in sector `direction` of the proposal within
// eta * image diagonal; ascending id order.
std::vector<Concept> candidate_concepts(const BBox& proposal, int direction,
                                        const std::vector<Concept>& nu,
                                        const ConceptConfig& cfg,
                                        const ImageDims& image);

// Argmax of lambda * capped normalized distance + alpha * aspect score of
// the merged hull; ties prefer higher objectness, then lower id.
std::optional<Concept> select_representative(const std::vector<Concept>& cands,
                                             const BBox& proposal,
                                             const ConceptConfig& cfg,
                                             const ImageDims& image);

// Window formation (merge with the representative, then trim) plus fallback.
// One bag per proposal; obstacles that overlap the owning proposal are
// ignored when trimming. Proposals with no candidate concept in any
// direction fall back to the neighbor-window sampler with G bags, seeded per
// proposal from `seed`.
std::vector<ConceptBag> form_bags(const std::vector<ScoredBox>& proposals,
                                  const std::vector<Concept>& nu,
                                  const ConceptConfig& cfg,
                                  const ImageDims& image, std::uint64_t seed);

} // namespace sbv
