#include "sbv/view_switch.hpp"

#include <cmath>
#include <stdexcept>

namespace sbv {

void ViewWeights::validate() const {
    for (double w : {global_weight, middle_weight, local_weight}) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw std::invalid_argument("view weights must lie in [0, 1]");
        }
    }
}

double ViewWeights::of(ViewLevel level) const {
    switch (level) {
    case ViewLevel::Global: return global_weight;
    case ViewLevel::Middle: return middle_weight;
    case ViewLevel::Local:  return local_weight;
    }
    return 0.0;
}

ViewSet hierarchical_views(const ConceptBag& bag, const ImageDims& image) {
    const std::vector<BBox>* locals = nullptr;
    std::vector<BBox> window_boxes;
    if (!bag.windows.empty()) {
        window_boxes.reserve(bag.windows.size());
        for (const ConceptWindow& w : bag.windows) {
            window_boxes.push_back(w.window);
        }
        locals = &window_boxes;
    } else if (!bag.fallback_regions.empty()) {
        locals = &bag.fallback_regions;
    } else {
        throw std::invalid_argument(
            "view switch: bag has no windows and no fallback regions");
    }
    ViewSet views;
    views.global = image.full_box();
    views.locals = *locals;
    BBox hull = views.locals.front();
    for (std::size_t i = 1; i < views.locals.size(); ++i) {
        hull = merge(hull, views.locals[i]);
    }
    views.middle = hull;
    return views;
}

int count_concepts(const BBox& view, const std::vector<Concept>& nu,
                   double coverage) {
    if (!(coverage > 0.0 && coverage <= 1.0)) {
        throw std::invalid_argument("view switch: coverage must be in (0, 1]");
    }
    int count = 0;
    for (const Concept& c : nu) {
        if (intersection_area(c.box.box, view) >= coverage * c.box.box.area()) {
            ++count;
        }
    }
    return count;
}

double switch_threshold(double r, int local_count, int parent_count) {
    if (parent_count < 1) {
        throw std::invalid_argument("view switch: parent concept count must be >= 1");
    }
    return r * std::abs(local_count - parent_count) /
           static_cast<double>(parent_count);
}

SwitchDecision select_view(int local_idx, const ViewSet& views,
                           const std::vector<Concept>& nu,
                           const ViewWeights& weights, double tau_switch,
                           double coverage) {
    if (local_idx < 0 || static_cast<std::size_t>(local_idx) >= views.locals.size()) {
        throw std::invalid_argument("view switch: local index out of range");
    }
    SwitchDecision decision;
    decision.local_index = local_idx;
    BBox current = views.locals[static_cast<std::size_t>(local_idx)];
    ViewLevel level = ViewLevel::Local;
    while (level != ViewLevel::Global) {
        // Next promotion target, skipping levels whose weight is zero.
        ViewLevel parent_level = ViewLevel::Global;
        BBox parent = views.global;
        if (level == ViewLevel::Local && weights.middle_weight > 0.0) {
            parent_level = ViewLevel::Middle;
            parent = views.middle;
        } else if (weights.global_weight == 0.0) {
            break;
        }
        const int parent_count = count_concepts(parent, nu, coverage);
        if (parent_count == 0) {
            break;
        }
        const double r = current.area() / parent.area();
        const int local_count = count_concepts(current, nu, coverage);
        const double tau = switch_threshold(r, local_count, parent_count);
        decision.r = r;
        decision.local_count = local_count;
        decision.parent_count = parent_count;
        decision.tau = tau;
        if (!(tau > tau_switch)) {
            break;
        }
        level = parent_level;
        current = parent;
    }
    decision.chosen = level;
    return decision;
}

BBox view_box(const SwitchDecision& decision, const ViewSet& views) {
    switch (decision.chosen) {
    case ViewLevel::Global: return views.global;
    case ViewLevel::Middle: return views.middle;
    case ViewLevel::Local:
        return views.locals[static_cast<std::size_t>(decision.local_index)];
    }
    return views.global;
}

} // namespace sbv
