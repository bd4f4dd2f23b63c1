#include "sbv/proposal_prep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sbv {

double PrepConfig::resolved_min_area(const ImageDims& image) const {
    if (min_area) {
        return *min_area;
    }
    const double side = 0.01 * image.diagonal();
    return side * side;
}

void PrepConfig::validate() const {
    if (topk < 1) {
        throw std::invalid_argument("PrepConfig: topk must be >= 1");
    }
    if (extra_proposals < 0) {
        throw std::invalid_argument("PrepConfig: extra_proposals must be >= 0");
    }
    if (!(distance_weight >= 0.0 && distance_weight <= 1.0)) {
        throw std::invalid_argument("PrepConfig: distance_weight must be in [0, 1]");
    }
    if (!(distance_threshold > 0.0)) {
        throw std::invalid_argument("PrepConfig: distance_threshold must be > 0");
    }
    if (min_area && !(*min_area >= 0.0)) {
        throw std::invalid_argument("PrepConfig: min_area must be >= 0");
    }
}

namespace {

// Objectness descending, original index breaking ties.
std::vector<std::size_t> objectness_order(const std::vector<ScoredBox>& boxes) {
    std::vector<std::size_t> order(boxes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (boxes[a].objectness != boxes[b].objectness) {
            return boxes[a].objectness > boxes[b].objectness;
        }
        return a < b;
    });
    return order;
}

} // namespace

std::vector<ScoredBox> reduce_nonoverlapping(const std::vector<ScoredBox>& topk,
                                             const std::vector<ScoredBox>& proposals,
                                             const PrepConfig& cfg,
                                             const ImageDims& image) {
    const double min_area = cfg.resolved_min_area(image);
    std::vector<ScoredBox> kept;
    for (std::size_t idx : objectness_order(topk)) {
        const ScoredBox& cand = topk[idx];
        if (cand.box.area() < min_area) {
            continue;
        }
        auto clears = [&](const ScoredBox& other) {
            return iou(cand.box, other.box) <= cfg.overlap_threshold;
        };
        if (!std::all_of(proposals.begin(), proposals.end(), clears)) {
            continue;
        }
        if (!std::all_of(kept.begin(), kept.end(), clears)) {
            continue;
        }
        kept.push_back(cand);
    }
    return kept;
}

double farthest_score(const ScoredBox& candidate, const std::vector<BBox>& anchors,
                      const PrepConfig& cfg, const ImageDims& image) {
    if (anchors.empty()) {
        throw std::invalid_argument("farthest_score: anchor set must be nonempty");
    }
    double sum = 0.0;
    for (const BBox& anchor : anchors) {
        sum += center_distance(candidate.box, anchor);
    }
    const double mean = sum / static_cast<double>(anchors.size());
    const double scale = cfg.distance_threshold * image.diagonal();
    const double normalized = std::min(mean / scale, 1.0);
    return cfg.distance_weight * normalized + (1.0 - cfg.distance_weight) * candidate.objectness;
}

std::vector<ScoredBox> select_extra(const std::vector<ScoredBox>& reduced,
                                    const std::vector<ScoredBox>& proposals,
                                    const PrepConfig& cfg, const ImageDims& image) {
    std::vector<BBox> anchors;
    anchors.reserve(proposals.size() + static_cast<std::size_t>(cfg.extra_proposals));
    for (const ScoredBox& p : proposals) {
        anchors.push_back(p.box);
    }

    std::vector<bool> used(reduced.size(), false);
    std::vector<ScoredBox> selected;
    for (int round = 0; round < cfg.extra_proposals; ++round) {
        std::optional<std::size_t> best;
        double best_score = 0.0;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (used[i]) {
                continue;
            }
            const double score = farthest_score(reduced[i], anchors, cfg, image);
            // Ascending scan, so equal (score, objectness) keeps the lower index.
            bool better = !best;
            if (best && score != best_score) {
                better = score > best_score;
            } else if (best && reduced[i].objectness != reduced[*best].objectness) {
                better = reduced[i].objectness > reduced[*best].objectness;
            }
            if (better) {
                best = i;
                best_score = score;
            }
        }
        if (!best) {
            break;
        }
        used[*best] = true;
        selected.push_back(reduced[*best]);
        anchors.push_back(reduced[*best].box);
    }
    return selected;
}

ProposalSets preprocess(const std::vector<ScoredBox>& proposals,
                        const std::vector<ScoredBox>& topk,
                        const PrepConfig& cfg, const ImageDims& image) {
    cfg.validate();
    ProposalSets sets;
    sets.proposals = proposals;
    sets.topk = topk;
    if (sets.topk.size() > static_cast<std::size_t>(cfg.topk)) {
        auto order = objectness_order(sets.topk);
        std::vector<ScoredBox> truncated;
        truncated.reserve(static_cast<std::size_t>(cfg.topk));
        for (int i = 0; i < cfg.topk; ++i) {
            truncated.push_back(sets.topk[order[static_cast<std::size_t>(i)]]);
        }
        sets.topk = std::move(truncated);
    }
    sets.reduced = reduce_nonoverlapping(sets.topk, proposals, cfg, image);
    sets.added = proposals;
    if (!proposals.empty()) {
        auto extras = select_extra(sets.reduced, proposals, cfg, image);
        sets.added.insert(sets.added.end(), extras.begin(), extras.end());
    }
    return sets;
}

} // namespace sbv
