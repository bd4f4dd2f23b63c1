#pragma once

#include <vector>

#include "sbv/concept_bag.hpp"
#include "sbv/geometry.hpp"

namespace sbv {

enum class ViewLevel { Global, Middle, Local };

struct ViewWeights {
    double global_weight = 0.0; // delta_global
    double middle_weight = 0.8; // delta_middle
    double local_weight = 1.0;  // delta_local

    void validate() const;
    double of(ViewLevel level) const;
};

struct ViewSet {
    BBox global;
    BBox middle;
    std::vector<BBox> locals;
};

// Evidence of the last local-vs-parent comparison; defaults describe "no
// comparison happened" (r = 1, L = P, tau = 0).
struct SwitchDecision {
    int local_index = 0;  // position in ViewSet::locals
    int concept_id = -1;  // filled by callers that know the window mapping
    double r = 1.0;       // current area / parent area
    int local_count = 0;  // L
    int parent_count = 0; // P
    double tau = 0.0;
    ViewLevel chosen = ViewLevel::Local;
};

// Global = whole image, middle = hull of the bag's windows (or fallback
// regions), locals = the windows themselves.
ViewSet hierarchical_views(const ConceptBag& bag, const ImageDims& image);

// Concepts with at least `coverage` of their area inside the view.
int count_concepts(const BBox& view, const std::vector<Concept>& nu,
                   double coverage);

// tau = r * |L - P| / P.
double switch_threshold(double r, int local_count, int parent_count);

// Greedy promotion Local -> Middle -> Global: promote whenever tau exceeds
// tau_switch; levels with zero delta weight are skipped as targets; a parent
// containing zero concepts stops the chain.
SwitchDecision select_view(int local_idx, const ViewSet& views,
                           const std::vector<Concept>& nu,
                           const ViewWeights& weights, double tau_switch,
                           double coverage);

BBox view_box(const SwitchDecision& decision, const ViewSet& views);

} // namespace sbv
